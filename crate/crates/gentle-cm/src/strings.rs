//! Strings, bands, dimension vectors, and the maps between a gentle
//! algebra and its Cohen-Macaulay Auslander algebra.
//!
//! A string is a word `c₁c₂…c_n` in arrows and formal inverses with
//! `s(c_i) = t(c_{i+1})`, no letter followed by its own inverse, and no
//! subword (nor the inverse of a subword) equal to a relation. Words are
//! stored in word order: `c_n` is traversed first, matching the path
//! convention. Strings index the indecomposable modules of a
//! representation-finite gentle algebra, one per class under inversion.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::cm::cyclic_arrows;
use crate::error::{Error, Result};
use crate::quiver::{GentlePresentation, Quiver};

pub const DEFAULT_STRING_CAP: usize = 100_000;

/// An arrow or its formal inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub arrow: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn direct(arrow: usize) -> Self {
        Letter {
            arrow,
            inverse: false,
        }
    }

    pub fn inverse_of(arrow: usize) -> Self {
        Letter {
            arrow,
            inverse: true,
        }
    }

    pub fn opposite(self) -> Self {
        Letter {
            arrow: self.arrow,
            inverse: !self.inverse,
        }
    }

    pub fn source(self, q: &Quiver) -> usize {
        let a = q.arrow(self.arrow);
        if self.inverse {
            a.target
        } else {
            a.source
        }
    }

    pub fn target(self, q: &Quiver) -> usize {
        let a = q.arrow(self.arrow);
        if self.inverse {
            a.source
        } else {
            a.target
        }
    }

    /// Canonical comparison key: arrow id lexicographic, direct before
    /// inverse.
    pub fn key(self, q: &Quiver) -> (&str, bool) {
        (q.arrow(self.arrow).id.as_str(), self.inverse)
    }

    pub fn display(self, q: &Quiver) -> String {
        if self.inverse {
            format!("{}^-1", q.arrow(self.arrow).id)
        } else {
            q.arrow(self.arrow).id.to_string()
        }
    }
}

/// A word in letters, or a trivial string carried by a vertex and a sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StringWord {
    Trivial { vertex: usize, sign: i8 },
    Letters(Vec<Letter>),
}

impl StringWord {
    pub fn trivial(vertex: usize) -> Self {
        StringWord::Trivial { vertex, sign: 1 }
    }

    pub fn len(&self) -> usize {
        match self {
            StringWord::Trivial { .. } => 0,
            StringWord::Letters(ls) => ls.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn inverse(&self) -> Self {
        match self {
            StringWord::Trivial { vertex, sign } => StringWord::Trivial {
                vertex: *vertex,
                sign: -sign,
            },
            StringWord::Letters(ls) => {
                StringWord::Letters(ls.iter().rev().map(|l| l.opposite()).collect())
            }
        }
    }

    /// Source vertex `s(w) = s(c_n)`, the end where traversal starts.
    pub fn source(&self, q: &Quiver) -> usize {
        match self {
            StringWord::Trivial { vertex, .. } => *vertex,
            StringWord::Letters(ls) => ls.last().unwrap().source(q),
        }
    }

    /// Target vertex `t(w) = t(c₁)`.
    pub fn target(&self, q: &Quiver) -> usize {
        match self {
            StringWord::Trivial { vertex, .. } => *vertex,
            StringWord::Letters(ls) => ls[0].target(q),
        }
    }

    /// The visited vertices `u(0), …, u(n)` with `u(i) = t(c_{i+1})` and
    /// `u(n) = s(w)`.
    pub fn visited(&self, q: &Quiver) -> Vec<usize> {
        match self {
            StringWord::Trivial { vertex, .. } => vec![*vertex],
            StringWord::Letters(ls) => {
                let mut u = Vec::with_capacity(ls.len() + 1);
                u.push(ls[0].target(q));
                for l in ls {
                    u.push(l.source(q));
                }
                u
            }
        }
    }

    fn keys<'q>(&self, q: &'q Quiver) -> Vec<(&'q str, bool)> {
        match self {
            StringWord::Trivial { .. } => Vec::new(),
            StringWord::Letters(ls) => ls.iter().map(|l| l.key(q)).collect(),
        }
    }

    pub fn display(&self, q: &Quiver) -> String {
        match self {
            StringWord::Trivial { vertex, .. } => format!("e({})", q.vertex_id(*vertex)),
            StringWord::Letters(ls) => ls
                .iter()
                .map(|l| l.display(q))
                .collect::<Vec<_>>()
                .join(","),
        }
    }

    /// Parse a CLI literal: `e(<vertex>)` or comma-separated letters with
    /// a trailing `^-1` marking inverses.
    pub fn parse(p: &GentlePresentation, text: &str) -> Result<Self> {
        let q = p.quiver();
        let t = text.trim();
        if let Some(inner) = t.strip_prefix("e(").and_then(|r| r.strip_suffix(')')) {
            let v = q
                .vertex_idx(inner.trim())
                .ok_or(Error::UnknownVertex(inner.trim().to_string()))?;
            return Ok(StringWord::trivial(v));
        }
        let mut letters = Vec::new();
        for tok in t.split(',') {
            let tok = tok.trim();
            let (id, inv) = match tok.strip_suffix("^-1") {
                Some(base) => (base, true),
                None => (tok, false),
            };
            let arrow = q.arrow_idx(id).ok_or(Error::UnknownArrow(id.to_string()))?;
            letters.push(Letter {
                arrow,
                inverse: inv,
            });
        }
        if letters.is_empty() {
            return Err(Error::NotAString(text.to_string()));
        }
        let w = StringWord::Letters(letters);
        if !is_string(p, &w) {
            return Err(Error::NotAString(text.to_string()));
        }
        Ok(w)
    }
}

/// Whether two letters may sit adjacently as `(c_i, c_{i+1})` in a string.
pub fn valid_pair(p: &GentlePresentation, c: Letter, d: Letter) -> bool {
    let q = p.quiver();
    if d == c.opposite() || c.source(q) != d.target(q) {
        return false;
    }
    match (c.inverse, d.inverse) {
        // both direct: the subword cd is the path traversing d then c
        (false, false) => !p.has_relation(d.arrow, c.arrow),
        // both inverse: the inverse subword traverses c.arrow then d.arrow
        (true, true) => !p.has_relation(c.arrow, d.arrow),
        _ => true,
    }
}

/// Whether `w` satisfies all string conditions over `p`.
pub fn is_string(p: &GentlePresentation, w: &StringWord) -> bool {
    match w {
        StringWord::Trivial { vertex, .. } => *vertex < p.quiver().vertex_count(),
        StringWord::Letters(ls) => {
            if ls.is_empty() {
                return false;
            }
            ls.windows(2).all(|w| valid_pair(p, w[0], w[1]))
        }
    }
}

/// The representative of `{w, w⁻¹}` that is lexicographically least under
/// the canonical letter order; trivial strings normalize to sign `+1`.
pub fn canonical_string(p: &GentlePresentation, w: &StringWord) -> StringWord {
    match w {
        StringWord::Trivial { vertex, .. } => StringWord::trivial(*vertex),
        StringWord::Letters(_) => {
            let q = p.quiver();
            let inv = w.inverse();
            if w.keys(q) <= inv.keys(q) {
                w.clone()
            } else {
                inv
            }
        }
    }
}

/// A band: a cyclic string, primitively reduced, all of whose powers are
/// strings. Stored as the lexicographically least word among all rotations
/// of itself and of its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Band {
    pub word: StringWord,
}

impl Band {
    pub fn display(&self, q: &Quiver) -> String {
        self.word.display(q)
    }
}

fn all_letters(p: &GentlePresentation) -> Vec<Letter> {
    let q = p.quiver();
    let mut ls: Vec<Letter> = (0..q.arrow_count())
        .flat_map(|a| [Letter::direct(a), Letter::inverse_of(a)])
        .collect();
    ls.sort_by(|x, y| x.key(q).cmp(&y.key(q)));
    ls
}

fn rotations(ls: &[Letter]) -> Vec<Vec<Letter>> {
    (0..ls.len())
        .map(|i| {
            let mut r = ls[i..].to_vec();
            r.extend_from_slice(&ls[..i]);
            r
        })
        .collect()
}

fn is_primitive(ls: &[Letter]) -> bool {
    let n = ls.len();
    for d in 1..n {
        if n.is_multiple_of(d) && (0..n).all(|i| ls[i] == ls[i % d]) {
            return false;
        }
    }
    true
}

fn canonical_band(p: &GentlePresentation, ls: &[Letter]) -> Vec<Letter> {
    let q = p.quiver();
    let inv: Vec<Letter> = ls.iter().rev().map(|l| l.opposite()).collect();
    let mut best: Option<Vec<Letter>> = None;
    for cand in rotations(ls).into_iter().chain(rotations(&inv)) {
        let better = match &best {
            None => true,
            Some(b) => {
                let key =
                    |w: &[Letter]| -> Vec<(&str, bool)> { w.iter().map(|l| l.key(q)).collect() };
                key(&cand) < key(b)
            }
        };
        if better {
            best = Some(cand);
        }
    }
    best.unwrap()
}

/// Search for a band. Nodes are letters, edges are valid adjacent pairs; a
/// shortest cycle through the least letter that lies on one is returned
/// after verifying the wrap condition, that every rotation is a string,
/// and primitivity. Deterministic for a fixed presentation.
pub fn find_band(p: &GentlePresentation) -> Option<Band> {
    let letters = all_letters(p);
    let succ: Vec<Vec<usize>> = letters
        .iter()
        .map(|&c| {
            letters
                .iter()
                .enumerate()
                .filter(|(_, &d)| valid_pair(p, c, d))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    for (start, _) in letters.iter().enumerate() {
        // BFS for a shortest cycle through `start`
        let mut parent: Vec<Option<usize>> = vec![None; letters.len()];
        let mut seen = vec![false; letters.len()];
        let mut queue = VecDeque::new();
        seen[start] = true;
        queue.push_back(start);
        let mut found = None;
        'bfs: while let Some(u) = queue.pop_front() {
            for &v in &succ[u] {
                if v == start {
                    found = Some(u);
                    break 'bfs;
                }
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = Some(u);
                    queue.push_back(v);
                }
            }
        }
        if let Some(mut u) = found {
            let mut cycle = vec![u];
            while let Some(par) = parent[u] {
                cycle.push(par);
                u = par;
            }
            cycle.reverse();
            let word: Vec<Letter> = cycle.into_iter().map(|i| letters[i]).collect();
            let word = canonical_band(p, &word);
            let n = word.len();
            debug_assert!(is_primitive(&word));
            debug_assert!(valid_pair(p, word[n - 1], word[0]));
            debug_assert!(rotations(&word)
                .into_iter()
                .all(|r| is_string(p, &StringWord::Letters(r))));
            return Some(Band {
                word: StringWord::Letters(word),
            });
        }
    }
    None
}

/// A gentle algebra is representation finite exactly when it has no band.
pub fn is_representation_finite(p: &GentlePresentation) -> bool {
    find_band(p).is_none()
}

/// All strings up to inversion, one trivial string per vertex, ordered by
/// length then canonical letter keys. Refuses representation-infinite
/// input and stops at `cap` strings.
pub fn enumerate_strings_capped(p: &GentlePresentation, cap: usize) -> Result<Vec<StringWord>> {
    if let Some(b) = find_band(p) {
        return Err(Error::NotRepresentationFinite(b.display(p.quiver())));
    }
    let q = p.quiver();
    let letters = all_letters(p);
    let mut classes: BTreeSet<StringWord> = BTreeSet::new();
    for v in 0..q.vertex_count() {
        classes.insert(StringWord::trivial(v));
    }
    let mut frontier: Vec<Vec<Letter>> = letters.iter().map(|&l| vec![l]).collect();
    while let Some(word) = frontier.pop() {
        classes.insert(canonical_string(p, &StringWord::Letters(word.clone())));
        if classes.len() > cap {
            return Err(Error::CapExceeded {
                what: "enumerated strings".into(),
                cap,
            });
        }
        let last = *word.last().unwrap();
        for &d in &letters {
            if valid_pair(p, last, d) {
                let mut ext = word.clone();
                ext.push(d);
                frontier.push(ext);
            }
        }
    }
    let mut out: Vec<StringWord> = classes.into_iter().collect();
    out.sort_by(|x, y| {
        let kx = (x.len(), x.keys(q), trivial_vertex(x));
        let ky = (y.len(), y.keys(q), trivial_vertex(y));
        kx.cmp(&ky)
    });
    Ok(out)
}

fn trivial_vertex(w: &StringWord) -> usize {
    match w {
        StringWord::Trivial { vertex, .. } => *vertex,
        StringWord::Letters(_) => 0,
    }
}

pub fn enumerate_strings(p: &GentlePresentation) -> Result<Vec<StringWord>> {
    enumerate_strings_capped(p, DEFAULT_STRING_CAP)
}

/// Vertex-indexed visit counts of a string; the total is `len + 1`.
pub fn dimension_vector(p: &GentlePresentation, w: &StringWord) -> Vec<usize> {
    let mut dims = vec![0usize; p.quiver().vertex_count()];
    for v in w.visited(p.quiver()) {
        dims[v] += 1;
    }
    dims
}

/// Dimension vector keyed by vertex id, for reporting.
pub fn dimension_vector_map(p: &GentlePresentation, w: &StringWord) -> BTreeMap<String, usize> {
    dimension_vector(p, w)
        .into_iter()
        .enumerate()
        .filter(|(_, k)| *k > 0)
        .map(|(v, k)| (p.quiver().vertex_id(v).to_string(), k))
        .collect()
}

/// Whether distinct canonical strings always have distinct dimension
/// vectors. Refuses representation-infinite input.
pub fn dim_vector_uniqueness(p: &GentlePresentation) -> Result<bool> {
    let strings = enumerate_strings(p)?;
    let mut seen = BTreeSet::new();
    for w in &strings {
        if !seen.insert(dimension_vector(p, w)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The letter-substitution correspondence between a gentle presentation
/// and its Cohen-Macaulay Auslander presentation. Each cyclic arrow `α`
/// maps to the composite `α⁻α⁺`; everything else is carried over by id.
pub struct CmAusMap<'a> {
    pub base: &'a GentlePresentation,
    pub aus: &'a GentlePresentation,
    /// per base arrow: either the identical arrow in `aus`, or the pair
    /// `(α⁻, α⁺)` of split halves
    images: Vec<ArrowImage>,
    /// base vertex index -> aus vertex index (id-preserving)
    vertex_map: Vec<usize>,
    /// aus vertex index -> base vertex index, None for `[α]` vertices
    vertex_back: Vec<Option<usize>>,
    /// aus arrow index -> (base arrow, role)
    arrow_back: Vec<(usize, ArrowRole)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ArrowImage {
    Same(usize),
    Split { minus: usize, plus: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrowRole {
    Same,
    Plus,
    Minus,
}

impl<'a> CmAusMap<'a> {
    pub fn new(base: &'a GentlePresentation, aus: &'a GentlePresentation) -> Result<Self> {
        let bq = base.quiver();
        let aq = aus.quiver();
        let cyc = cyclic_arrows(base);
        let mut vertex_map = Vec::with_capacity(bq.vertex_count());
        for v in bq.vertices() {
            vertex_map.push(
                aq.vertex_idx(v)
                    .ok_or_else(|| Error::NotCmAuslanderOf(format!("missing vertex {v}")))?,
            );
        }
        let mut vertex_back = vec![None; aq.vertex_count()];
        for (b, &a) in vertex_map.iter().enumerate() {
            vertex_back[a] = Some(b);
        }
        let mut images = Vec::with_capacity(bq.arrow_count());
        let mut arrow_back = vec![(usize::MAX, ArrowRole::Same); aq.arrow_count()];
        for (i, arrow) in bq.arrows().iter().enumerate() {
            if cyc.contains(&i) {
                let plus = aq.arrow_idx(&format!("{}+", arrow.id)).ok_or_else(|| {
                    Error::NotCmAuslanderOf(format!("missing arrow {}+", arrow.id))
                })?;
                let minus = aq.arrow_idx(&format!("{}-", arrow.id)).ok_or_else(|| {
                    Error::NotCmAuslanderOf(format!("missing arrow {}-", arrow.id))
                })?;
                arrow_back[plus] = (i, ArrowRole::Plus);
                arrow_back[minus] = (i, ArrowRole::Minus);
                images.push(ArrowImage::Split { minus, plus });
            } else {
                let same = aq.arrow_idx(&arrow.id).ok_or_else(|| {
                    Error::NotCmAuslanderOf(format!("missing arrow {}", arrow.id))
                })?;
                arrow_back[same] = (i, ArrowRole::Same);
                images.push(ArrowImage::Same(same));
            }
        }
        if arrow_back.iter().any(|&(b, _)| b == usize::MAX) {
            return Err(Error::NotCmAuslanderOf(
                "extra arrows not explained by the construction".into(),
            ));
        }
        Ok(CmAusMap {
            base,
            aus,
            images,
            vertex_map,
            vertex_back,
            arrow_back,
        })
    }

    /// Whether an aus vertex is an original module vertex (lies in `Q₀`).
    pub fn is_base_vertex(&self, aus_vertex: usize) -> bool {
        self.vertex_back[aus_vertex].is_some()
    }

    /// Substitute every cyclic letter: `α ↦ α⁻α⁺` and
    /// `α⁻¹ ↦ (α⁺)⁻¹(α⁻)⁻¹`.
    pub fn iota(&self, w: &StringWord) -> Result<StringWord> {
        if !is_string(self.base, w) {
            return Err(Error::NotAString(w.display(self.base.quiver())));
        }
        let image = match w {
            StringWord::Trivial { vertex, sign } => StringWord::Trivial {
                vertex: self.vertex_map[*vertex],
                sign: *sign,
            },
            StringWord::Letters(ls) => {
                let mut out = Vec::new();
                for l in ls {
                    match self.images[l.arrow] {
                        ArrowImage::Same(a) => out.push(Letter {
                            arrow: a,
                            inverse: l.inverse,
                        }),
                        ArrowImage::Split { minus, plus } => {
                            if l.inverse {
                                out.push(Letter::inverse_of(plus));
                                out.push(Letter::inverse_of(minus));
                            } else {
                                out.push(Letter::direct(minus));
                                out.push(Letter::direct(plus));
                            }
                        }
                    }
                }
                StringWord::Letters(out)
            }
        };
        debug_assert!(is_string(self.aus, &image));
        Ok(image)
    }

    /// Replace each adjacent pair `α⁻α⁺` (or its inverse) by `α` (or
    /// `α⁻¹`); the input must contain only complete pairs.
    fn contract(&self, ls: &[Letter]) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < ls.len() {
            let (base_arrow, role) = self.arrow_back[ls[i].arrow];
            match (role, ls[i].inverse) {
                (ArrowRole::Same, inv) => {
                    out.push(Letter {
                        arrow: base_arrow,
                        inverse: inv,
                    });
                    i += 1;
                }
                (ArrowRole::Minus, false) => {
                    // expect α⁺ next
                    let ok = i + 1 < ls.len()
                        && self.arrow_back[ls[i + 1].arrow] == (base_arrow, ArrowRole::Plus)
                        && !ls[i + 1].inverse;
                    if !ok {
                        return Err(Error::NotCmAuslanderOf(
                            "unpaired split arrow in contraction".into(),
                        ));
                    }
                    out.push(Letter::direct(base_arrow));
                    i += 2;
                }
                (ArrowRole::Plus, true) => {
                    // expect (α⁻)⁻¹ next
                    let ok = i + 1 < ls.len()
                        && self.arrow_back[ls[i + 1].arrow] == (base_arrow, ArrowRole::Minus)
                        && ls[i + 1].inverse;
                    if !ok {
                        return Err(Error::NotCmAuslanderOf(
                            "unpaired split arrow in contraction".into(),
                        ));
                    }
                    out.push(Letter::inverse_of(base_arrow));
                    i += 2;
                }
                _ => {
                    return Err(Error::NotCmAuslanderOf(
                        "unpaired split arrow in contraction".into(),
                    ));
                }
            }
        }
        Ok(out)
    }

    /// Contract the longest substring whose endpoints are both module
    /// vertices. Fails only on trivial strings at split vertices, which
    /// have no such substring.
    pub fn pi_minus(&self, v: &StringWord) -> Result<StringWord> {
        if !is_string(self.aus, v) {
            return Err(Error::NotAString(v.display(self.aus.quiver())));
        }
        match v {
            StringWord::Trivial { vertex, .. } => match self.vertex_back[*vertex] {
                Some(b) => Ok(StringWord::trivial(b)),
                None => Err(Error::NoCoreSubstring),
            },
            StringWord::Letters(ls) => {
                let visited = v.visited(self.aus.quiver());
                let core: Vec<usize> = (0..visited.len())
                    .filter(|&i| self.is_base_vertex(visited[i]))
                    .collect();
                let (&i_min, &j_max) = match (core.first(), core.last()) {
                    (Some(a), Some(b)) => (a, b),
                    _ => return Err(Error::NoCoreSubstring),
                };
                debug_assert!(v.len() - (j_max - i_min) <= 2);
                if i_min == j_max {
                    let b = self.vertex_back[visited[i_min]].unwrap();
                    return Ok(StringWord::trivial(b));
                }
                let sub = &ls[i_min..j_max];
                let word = StringWord::Letters(self.contract(sub)?);
                debug_assert!(is_string(self.base, &word));
                Ok(word)
            }
        }
    }

    /// Extend to the shortest superstring whose endpoints are both module
    /// vertices, then contract.
    pub fn pi_plus(&self, v: &StringWord) -> Result<StringWord> {
        if !is_string(self.aus, v) {
            return Err(Error::NotAString(v.display(self.aus.quiver())));
        }
        let aq = self.aus.quiver();
        let letters = all_letters(self.aus);
        let mut ls = match v {
            StringWord::Trivial { vertex, .. } => {
                if let Some(b) = self.vertex_back[*vertex] {
                    return Ok(StringWord::trivial(b));
                }
                // the unique shortest superstring through `[α]` contracts
                // back to the single letter α
                for (base_arrow, im) in self.images.iter().enumerate() {
                    if let ArrowImage::Split { minus, .. } = im {
                        if aq.arrow(*minus).source == *vertex {
                            return Ok(StringWord::Letters(vec![Letter::direct(base_arrow)]));
                        }
                    }
                }
                return Err(Error::NoCoreSubstring);
            }
            StringWord::Letters(ls) => ls.clone(),
        };
        let mut grew = 0usize;
        // extend on the target side until it reaches a module vertex
        loop {
            let head = ls[0];
            if self.is_base_vertex(head.target(aq)) {
                break;
            }
            let mut candidates = letters
                .iter()
                .filter(|&&d| d.source(aq) == head.target(aq) && valid_pair(self.aus, d, head));
            let d = *candidates.next().ok_or(Error::NoCoreSubstring)?;
            debug_assert!(candidates.next().is_none());
            ls.insert(0, d);
            grew += 1;
        }
        // extend on the source side
        loop {
            let tail = *ls.last().unwrap();
            if self.is_base_vertex(tail.source(aq)) {
                break;
            }
            let mut candidates = letters
                .iter()
                .filter(|&&d| d.target(aq) == tail.source(aq) && valid_pair(self.aus, tail, d));
            let d = *candidates.next().ok_or(Error::NoCoreSubstring)?;
            debug_assert!(candidates.next().is_none());
            ls.push(d);
            grew += 1;
        }
        debug_assert!(grew <= 2);
        let word = StringWord::Letters(self.contract(&ls)?);
        debug_assert!(is_string(self.base, &word));
        Ok(word)
    }
}

/// One-shot wrappers over [`CmAusMap`].
pub fn iota(
    base: &GentlePresentation,
    aus: &GentlePresentation,
    w: &StringWord,
) -> Result<StringWord> {
    CmAusMap::new(base, aus)?.iota(w)
}

pub fn pi_minus(
    base: &GentlePresentation,
    aus: &GentlePresentation,
    v: &StringWord,
) -> Result<StringWord> {
    CmAusMap::new(base, aus)?.pi_minus(v)
}

pub fn pi_plus(
    base: &GentlePresentation,
    aus: &GentlePresentation,
    v: &StringWord,
) -> Result<StringWord> {
    CmAusMap::new(base, aus)?.pi_plus(v)
}

/// Strings of schurian cluster-type inputs never revisit a vertex; used as
/// a corpus assertion.
pub fn visits_no_vertex_twice(p: &GentlePresentation, w: &StringWord) -> bool {
    let visited = w.visited(p.quiver());
    let set: BTreeSet<usize> = visited.iter().copied().collect();
    set.len() == visited.len()
}

/// No-loop gentle algebras whose indecomposables are determined by their
/// dimension vectors cannot contain an oriented 2-cycle.
pub fn has_two_cycle(q: &Quiver) -> bool {
    q.arrows().iter().any(|a| {
        q.arrows()
            .iter()
            .any(|b| a.source == b.target && a.target == b.source && a.source != a.target)
    })
}

pub fn has_loop(q: &Quiver) -> bool {
    q.arrows().iter().any(|a| a.source == a.target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cm::cm_auslander;

    fn c3() -> GentlePresentation {
        GentlePresentation::parse(
            "vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 1\nrel b a\nrel c b\nrel a c\n",
        )
        .unwrap()
    }

    fn a2() -> GentlePresentation {
        GentlePresentation::parse("vertex 1 2\narrow a: 1 -> 2\n").unwrap()
    }

    fn kron() -> GentlePresentation {
        GentlePresentation::parse("vertex 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n").unwrap()
    }

    fn loop_algebra() -> GentlePresentation {
        GentlePresentation::parse("vertex 1\narrow a: 1 -> 1\nrel a a\n").unwrap()
    }

    fn twocyc() -> GentlePresentation {
        GentlePresentation::parse(
            "vertex 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrel a b\nrel b a\n",
        )
        .unwrap()
    }

    #[test]
    fn string_conditions() {
        let p = c3();
        let w = StringWord::parse(&p, "a").unwrap();
        assert!(is_string(&p, &w));
        // βα is a relation, so the word (b, a) is not a string
        let q = p.quiver();
        let ba = StringWord::Letters(vec![
            Letter::direct(q.arrow_idx("b").unwrap()),
            Letter::direct(q.arrow_idx("a").unwrap()),
        ]);
        assert!(!is_string(&p, &ba));
        assert!(StringWord::parse(&p, "b,a").is_err());
        // a letter may not follow its own inverse
        let aa = StringWord::Letters(vec![
            Letter::direct(q.arrow_idx("a").unwrap()),
            Letter::inverse_of(q.arrow_idx("a").unwrap()),
        ]);
        assert!(!is_string(&p, &aa));
        let hex = cm_auslander(&p).unwrap();
        let w = StringWord::parse(&hex, "a-,a+").unwrap();
        assert!(is_string(&hex, &w));
    }

    #[test]
    fn canonical_prefers_direct() {
        let p = a2();
        let direct = StringWord::parse(&p, "a").unwrap();
        let inv = StringWord::parse(&p, "a^-1").unwrap();
        assert_eq!(canonical_string(&p, &direct), direct);
        assert_eq!(canonical_string(&p, &inv), direct);
        let e_plus = StringWord::trivial(0);
        let e_minus = e_plus.inverse();
        assert_eq!(canonical_string(&p, &e_minus), e_plus);
        // idempotence
        for w in [direct, e_plus] {
            assert_eq!(
                canonical_string(&p, &w),
                canonical_string(&p, &canonical_string(&p, &w))
            );
        }
    }

    #[test]
    fn canonical_is_idempotent_and_class_invariant_on_a_corpus() {
        for seed in 0..20u64 {
            let p = crate::generate::random_gentle_presentation(6, seed);
            if find_band(&p).is_some() {
                continue;
            }
            for w in enumerate_strings(&p).unwrap() {
                let c = canonical_string(&p, &w);
                assert_eq!(canonical_string(&p, &c), c);
                assert_eq!(canonical_string(&p, &w.inverse()), c);
            }
        }
    }

    #[test]
    fn band_search() {
        let band = find_band(&kron()).unwrap();
        assert_eq!(band.display(kron().quiver()), "a,b^-1");
        assert!(find_band(&c3()).is_none());
        let hex = cm_auslander(&c3()).unwrap();
        assert!(find_band(&hex).is_none());
        assert!(find_band(&loop_algebra()).is_none());
    }

    #[test]
    fn representation_finiteness() {
        assert!(is_representation_finite(&c3()));
        assert!(!is_representation_finite(&kron()));
        assert!(is_representation_finite(&loop_algebra()));
    }

    #[test]
    fn string_counts() {
        assert_eq!(enumerate_strings(&a2()).unwrap().len(), 3);
        assert_eq!(enumerate_strings(&c3()).unwrap().len(), 6);
        let hex = cm_auslander(&c3()).unwrap();
        assert_eq!(enumerate_strings(&hex).unwrap().len(), 15);
        assert_eq!(enumerate_strings(&loop_algebra()).unwrap().len(), 2);
        assert!(enumerate_strings(&kron()).is_err());
    }

    #[test]
    fn dimension_vectors() {
        let p = a2();
        let w = StringWord::parse(&p, "a").unwrap();
        assert_eq!(dimension_vector(&p, &w), vec![1, 1]);
        assert_eq!(dimension_vector(&p, &StringWord::trivial(0)), vec![1, 0]);
        let hex = cm_auslander(&c3()).unwrap();
        let w = StringWord::parse(&hex, "a-,a+").unwrap();
        let dims = dimension_vector_map(&hex, &w);
        let expect: BTreeMap<String, usize> = [("1", 1), ("2", 1), ("[a]", 1)]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        assert_eq!(dims, expect);
        // total is always len + 1
        for w in enumerate_strings(&hex).unwrap() {
            assert_eq!(
                dimension_vector(&hex, &w).iter().sum::<usize>(),
                w.len() + 1
            );
        }
    }

    #[test]
    fn iota_and_projections() {
        let base = c3();
        let aus = cm_auslander(&base).unwrap();
        let map = CmAusMap::new(&base, &aus).unwrap();
        let a = StringWord::parse(&base, "a").unwrap();
        let image = map.iota(&a).unwrap();
        assert_eq!(image, StringWord::parse(&aus, "a-,a+").unwrap());
        // inverse compatibility
        assert_eq!(map.iota(&a.inverse()).unwrap(), image.inverse());
        // projections undo the substitution
        assert_eq!(map.pi_minus(&image).unwrap(), a);
        assert_eq!(map.pi_plus(&image).unwrap(), a);
        // single split letters
        let aplus = StringWord::parse(&aus, "a+").unwrap();
        assert_eq!(
            map.pi_minus(&aplus).unwrap(),
            StringWord::trivial(base.quiver().vertex_idx("1").unwrap())
        );
        assert_eq!(map.pi_plus(&aplus).unwrap(), a);
        // trivial string at a split vertex
        let at_split = StringWord::trivial(aus.quiver().vertex_idx("[a]").unwrap());
        assert!(map.pi_minus(&at_split).is_err());
        assert_eq!(map.pi_plus(&at_split).unwrap(), a);
    }

    #[test]
    fn projections_section_on_all_strings() {
        for base in [c3(), a2(), loop_algebra(), twocyc()] {
            let aus = cm_auslander(&base).unwrap();
            let map = CmAusMap::new(&base, &aus).unwrap();
            for w in enumerate_strings(&base).unwrap() {
                let img = map.iota(&w).unwrap();
                assert_eq!(map.pi_minus(&img).unwrap(), canonical_string(&base, &w));
                assert_eq!(map.pi_plus(&img).unwrap(), canonical_string(&base, &w));
                // dimension vectors restrict correctly
                let base_dims = dimension_vector(&base, &w);
                let aus_dims = dimension_vector(&aus, &img);
                for (v, id) in base.quiver().vertices().iter().enumerate() {
                    let av = aus.quiver().vertex_idx(id).unwrap();
                    assert_eq!(base_dims[v], aus_dims[av]);
                }
            }
        }
    }

    #[test]
    fn dim_vector_uniqueness_cases() {
        assert!(dim_vector_uniqueness(&a2()).unwrap());
        assert!(dim_vector_uniqueness(&c3()).unwrap());
        assert!(!dim_vector_uniqueness(&twocyc()).unwrap());
        let square = cm_auslander(&twocyc()).unwrap();
        assert!(dim_vector_uniqueness(&square).unwrap());
        // the loop is the documented counterexample to the converse
        assert!(dim_vector_uniqueness(&loop_algebra()).unwrap());
        let split_loop = cm_auslander(&loop_algebra()).unwrap();
        assert!(!dim_vector_uniqueness(&split_loop).unwrap());
        assert!(dim_vector_uniqueness(&kron()).is_err());
    }

    #[test]
    fn two_cycle_detection() {
        assert!(has_two_cycle(twocyc().quiver()));
        assert!(!has_two_cycle(c3().quiver()));
        assert!(has_loop(loop_algebra().quiver()));
    }
}
