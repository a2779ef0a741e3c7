//! Quivers with length-2 monomial relations.
//!
//! A presentation is a quiver together with a set of zero-relations `βα`
//! (read right to left: `α` is traversed first). Paths follow the same
//! convention: the word `α₁α₂…α_r` traverses `α_r` first, so its source is
//! `s(α_r)` and its target is `t(α₁)`. Internally paths and relations are
//! stored in traversal order; display and the file format use word order.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// An arrow of a quiver. Endpoints are indices into the vertex list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver: ordered vertices and ordered arrows with opaque string
/// ids. Declaration order is the canonical row/column order for every
/// matrix built downstream; nothing is ever sorted silently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
}

fn valid_id(id: &str) -> bool {
    !id.is_empty()
        && !id.contains("->")
        && !id.starts_with('#')
        && !id
            .chars()
            .any(|c| c.is_whitespace() || ":;,^()\"".contains(c))
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Self> {
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if !valid_id(v) {
                return Err(Error::InvalidId(v.clone()));
            }
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateId(v.clone()));
            }
        }
        let mut arrow_index = HashMap::new();
        let mut built = Vec::with_capacity(arrows.len());
        for (i, (id, src, tgt)) in arrows.into_iter().enumerate() {
            if !valid_id(&id) {
                return Err(Error::InvalidId(id));
            }
            if vertex_index.contains_key(&id) || arrow_index.contains_key(&id) {
                return Err(Error::DuplicateId(id));
            }
            let source = *vertex_index
                .get(&src)
                .ok_or(Error::UnknownVertex(src.clone()))?;
            let target = *vertex_index
                .get(&tgt)
                .ok_or(Error::UnknownVertex(tgt.clone()))?;
            arrow_index.insert(id.clone(), i);
            built.push(Arrow { id, source, target });
        }
        Ok(Quiver {
            vertices,
            arrows: built,
            vertex_index,
            arrow_index,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_id(&self, idx: usize) -> &str {
        &self.vertices[idx]
    }

    pub fn arrow(&self, idx: usize) -> &Arrow {
        &self.arrows[idx]
    }

    pub fn vertex_idx(&self, id: &str) -> Option<usize> {
        self.vertex_index.get(id).copied()
    }

    pub fn arrow_idx(&self, id: &str) -> Option<usize> {
        self.arrow_index.get(id).copied()
    }

    /// Arrows starting at `v`, in declaration order.
    pub fn out_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&a| self.arrows[a].source == v)
            .collect()
    }

    /// Arrows ending at `v`, in declaration order.
    pub fn in_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&a| self.arrows[a].target == v)
            .collect()
    }

    /// Weak connectivity of the underlying graph. The empty quiver counts
    /// as disconnected.
    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return false;
        }
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for a in &self.arrows {
            adj[a.source].push(a.target);
            adj[a.target].push(a.source);
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// An oriented path: either the trivial path at a vertex, or a nonempty
/// arrow sequence stored in traversal order (first traversed first).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Path {
    Trivial(usize),
    Arrows(Vec<usize>),
}

impl Path {
    pub fn len(&self) -> usize {
        match self {
            Path::Trivial(_) => 0,
            Path::Arrows(a) => a.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn source(&self, q: &Quiver) -> usize {
        match self {
            Path::Trivial(v) => *v,
            Path::Arrows(a) => q.arrow(a[0]).source,
        }
    }

    pub fn target(&self, q: &Quiver) -> usize {
        match self {
            Path::Trivial(v) => *v,
            Path::Arrows(a) => q.arrow(*a.last().unwrap()).target,
        }
    }

    /// Word form: arrow ids right to left (last traversed first).
    pub fn display(&self, q: &Quiver) -> String {
        match self {
            Path::Trivial(v) => format!("e({})", q.vertex_id(*v)),
            Path::Arrows(a) => a
                .iter()
                .rev()
                .map(|&i| q.arrow(i).id.as_str())
                .collect::<Vec<_>>()
                .join(" "),
        }
    }
}

/// Result of composing two paths in the quotient algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Composite {
    Path(Path),
    Zero,
}

/// One violated clause of the gentle axioms, with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    TooManyOutgoing {
        vertex: String,
        count: usize,
    },
    TooManyIncoming {
        vertex: String,
        count: usize,
    },
    /// More than one arrow continues `arrow` without hitting a relation.
    MultipleNonzeroContinuations {
        arrow: String,
    },
    /// More than one arrow precedes `arrow` without hitting a relation.
    MultipleNonzeroPredecessors {
        arrow: String,
    },
    /// More than one relation has `arrow` as its first (right) factor.
    MultipleZeroContinuations {
        arrow: String,
    },
    /// More than one relation has `arrow` as its second (left) factor.
    MultipleZeroPredecessors {
        arrow: String,
    },
    InfiniteDimensional {
        cycle: Vec<String>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooManyOutgoing { vertex, count } => {
                write!(f, "vertex {vertex} has {count} outgoing arrows (max 2)")
            }
            Violation::TooManyIncoming { vertex, count } => {
                write!(f, "vertex {vertex} has {count} incoming arrows (max 2)")
            }
            Violation::MultipleNonzeroContinuations { arrow } => write!(
                f,
                "arrow {arrow} has more than one relation-free continuation"
            ),
            Violation::MultipleNonzeroPredecessors { arrow } => write!(
                f,
                "arrow {arrow} has more than one relation-free predecessor"
            ),
            Violation::MultipleZeroContinuations { arrow } => {
                write!(f, "arrow {arrow} occurs as first factor of two relations")
            }
            Violation::MultipleZeroPredecessors { arrow } => {
                write!(f, "arrow {arrow} occurs as second factor of two relations")
            }
            Violation::InfiniteDimensional { cycle } => write!(
                f,
                "infinite dimensional: relation-free cycle {}",
                cycle.join(" ")
            ),
        }
    }
}

/// Report produced by `validate_gentle`: empty means the presentation is
/// gentle and finite dimensional.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            write!(f, "ok")
        } else {
            for (i, v) in self.violations.iter().enumerate() {
                if i > 0 {
                    writeln!(f)?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

/// A quiver with a set of length-2 zero-relations, presenting the algebra
/// `KQ/⟨I⟩`. Relations are stored as traversal-order pairs `(first, second)`
/// with `t(first) = s(second)`; the pair encodes the word `second·first`.
///
/// Construction only checks structural well-formedness (known ids,
/// composability). The gentle axioms are checked by [`validate_gentle`],
/// which reports violations instead of failing.
///
/// [`validate_gentle`]: GentlePresentation::validate_gentle
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GentlePresentation {
    quiver: Quiver,
    relations: Vec<(usize, usize)>,
    relation_set: HashSet<(usize, usize)>,
}

impl GentlePresentation {
    /// Build from word-order relation pairs `(beta, alpha)`, each meaning
    /// the composite `βα` (with `α` traversed first) is zero.
    pub fn new(quiver: Quiver, relations: Vec<(String, String)>) -> Result<Self> {
        let mut rels = Vec::new();
        for (beta, alpha) in relations {
            let b = quiver
                .arrow_idx(&beta)
                .ok_or(Error::UnknownArrow(beta.clone()))?;
            let a = quiver
                .arrow_idx(&alpha)
                .ok_or(Error::UnknownArrow(alpha.clone()))?;
            if quiver.arrow(a).target != quiver.arrow(b).source {
                return Err(Error::NonComposableRelation { beta, alpha });
            }
            rels.push((a, b));
        }
        rels.sort_unstable();
        rels.dedup();
        let relation_set = rels.iter().copied().collect();
        Ok(GentlePresentation {
            quiver,
            relations: rels,
            relation_set,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// Traversal-order relation pairs `(first, second)`, sorted.
    pub fn relations(&self) -> &[(usize, usize)] {
        &self.relations
    }

    pub fn has_relation(&self, first: usize, second: usize) -> bool {
        self.relation_set.contains(&(first, second))
    }

    /// Relations as word-order id pairs `(beta, alpha)`.
    pub fn relation_word_pairs(&self) -> Vec<(String, String)> {
        self.relations
            .iter()
            .map(|&(a, b)| {
                (
                    self.quiver.arrow(b).id.clone(),
                    self.quiver.arrow(a).id.clone(),
                )
            })
            .collect()
    }

    /// Checks every clause of the gentle axioms, including finite
    /// dimensionality, and lists each violation with a witness.
    pub fn validate_gentle(&self) -> ValidationReport {
        let q = &self.quiver;
        let mut violations = Vec::new();
        for v in 0..q.vertex_count() {
            let out = q.out_arrows(v).len();
            if out > 2 {
                violations.push(Violation::TooManyOutgoing {
                    vertex: q.vertex_id(v).to_string(),
                    count: out,
                });
            }
            let inc = q.in_arrows(v).len();
            if inc > 2 {
                violations.push(Violation::TooManyIncoming {
                    vertex: q.vertex_id(v).to_string(),
                    count: inc,
                });
            }
        }
        for a in 0..q.arrow_count() {
            let continuations = q.out_arrows(q.arrow(a).target);
            let nonzero = continuations
                .iter()
                .filter(|&&b| !self.has_relation(a, b))
                .count();
            let zero = continuations.len() - nonzero;
            if nonzero > 1 {
                violations.push(Violation::MultipleNonzeroContinuations {
                    arrow: q.arrow(a).id.clone(),
                });
            }
            if zero > 1 {
                violations.push(Violation::MultipleZeroContinuations {
                    arrow: q.arrow(a).id.clone(),
                });
            }
            let predecessors = q.in_arrows(q.arrow(a).source);
            let nonzero = predecessors
                .iter()
                .filter(|&&b| !self.has_relation(b, a))
                .count();
            let zero = predecessors.len() - nonzero;
            if nonzero > 1 {
                violations.push(Violation::MultipleNonzeroPredecessors {
                    arrow: q.arrow(a).id.clone(),
                });
            }
            if zero > 1 {
                violations.push(Violation::MultipleZeroPredecessors {
                    arrow: q.arrow(a).id.clone(),
                });
            }
        }
        if let Err(cycle) = self.finite_dimensional() {
            violations.push(Violation::InfiniteDimensional { cycle });
        }
        ValidationReport { violations }
    }

    pub fn is_gentle(&self) -> bool {
        self.validate_gentle().is_ok()
    }

    /// Successors of arrow `a` in the composable, relation-avoiding graph:
    /// arrows `b` with `t(a) = s(b)` and `ba ∉ I`.
    pub fn nonzero_successors(&self, a: usize) -> Vec<usize> {
        self.quiver
            .out_arrows(self.quiver.arrow(a).target)
            .into_iter()
            .filter(|&b| !self.has_relation(a, b))
            .collect()
    }

    /// Ok if no relation-free cycle exists; otherwise the arrow ids of one
    /// such cycle, in traversal order.
    pub fn finite_dimensional(&self) -> std::result::Result<(), Vec<String>> {
        let n = self.quiver.arrow_count();
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state = vec![0u8; n];
        let mut stack: Vec<usize> = Vec::new();
        for start in 0..n {
            if state[start] != 0 {
                continue;
            }
            // iterative DFS keeping the current path
            let mut path: Vec<(usize, Vec<usize>)> = vec![(start, self.nonzero_successors(start))];
            state[start] = 1;
            stack.clear();
            stack.push(start);
            while let Some((node, succs)) = path.last_mut() {
                if let Some(next) = succs.pop() {
                    match state[next] {
                        0 => {
                            state[next] = 1;
                            stack.push(next);
                            let s = self.nonzero_successors(next);
                            path.push((next, s));
                        }
                        1 => {
                            let pos = stack.iter().position(|&x| x == next).unwrap();
                            let cycle = stack[pos..]
                                .iter()
                                .map(|&a| self.quiver.arrow(a).id.clone())
                                .collect();
                            return Err(cycle);
                        }
                        _ => {}
                    }
                } else {
                    state[*node] = 2;
                    stack.pop();
                    path.pop();
                }
            }
        }
        Ok(())
    }

    /// Compose `left ∘ right` (right traversed first). Returns `Zero` when
    /// any length-2 subpath of the concatenation is a relation.
    pub fn compose(&self, left: &Path, right: &Path) -> Result<Composite> {
        let q = &self.quiver;
        if right.target(q) != left.source(q) {
            return Err(Error::NonComposablePaths {
                left_source: q.vertex_id(left.source(q)).to_string(),
                right_target: q.vertex_id(right.target(q)).to_string(),
            });
        }
        let mut arrows = Vec::new();
        if let Path::Arrows(a) = right {
            arrows.extend_from_slice(a);
        }
        if let Path::Arrows(a) = left {
            arrows.extend_from_slice(a);
        }
        if arrows.is_empty() {
            return Ok(Composite::Path(Path::Trivial(right.source(q))));
        }
        for w in arrows.windows(2) {
            if self.has_relation(w[0], w[1]) {
                return Ok(Composite::Zero);
            }
        }
        Ok(Composite::Path(Path::Arrows(arrows)))
    }

    /// All relation-avoiding paths, including one trivial path per vertex.
    /// Order: source vertex, then length, then the traversal-order id
    /// sequence. Fails on infinite-dimensional input.
    pub fn enumerate_nonzero_paths(&self) -> Result<Vec<Path>> {
        if let Err(cycle) = self.finite_dimensional() {
            return Err(Error::InfiniteDimensional { cycle });
        }
        let q = &self.quiver;
        let mut paths = Vec::new();
        for v in 0..q.vertex_count() {
            paths.push(Path::Trivial(v));
        }
        let mut frontier: Vec<Vec<usize>> = (0..q.arrow_count()).map(|a| vec![a]).collect();
        while let Some(p) = frontier.pop() {
            for b in self.nonzero_successors(*p.last().unwrap()) {
                let mut ext = p.clone();
                ext.push(b);
                frontier.push(ext);
            }
            paths.push(Path::Arrows(p));
        }
        paths.sort_by(|x, y| {
            let kx = (x.source(q), x.len(), path_id_seq(x, q));
            let ky = (y.source(q), y.len(), path_id_seq(y, q));
            kx.cmp(&ky)
        });
        Ok(paths)
    }

    /// Whether every ordered vertex pair carries at most one nonzero path.
    pub fn is_schurian(&self) -> Result<bool> {
        Ok(self
            .nonzero_path_counts()?
            .iter()
            .flatten()
            .all(|&c| c <= 1))
    }

    /// Matrix of nonzero path counts, entry `(i, j)` counting paths from
    /// vertex `i` to vertex `j` in declaration order.
    pub fn nonzero_path_counts(&self) -> Result<Vec<Vec<u64>>> {
        let n = self.quiver.vertex_count();
        let mut counts = vec![vec![0u64; n]; n];
        for p in self.enumerate_nonzero_paths()? {
            counts[p.source(&self.quiver)][p.target(&self.quiver)] += 1;
        }
        Ok(counts)
    }

    /// Parse the line-oriented `.quiver` format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertices: Vec<String> = Vec::new();
        let mut arrows: Vec<(String, String, String)> = Vec::new();
        let mut relations: Vec<(String, String, usize)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let l = raw.trim();
            if l.is_empty() || l.starts_with('#') {
                continue;
            }
            let mut tokens = l.split_whitespace();
            let keyword = tokens.next().unwrap();
            match keyword {
                "vertex" => {
                    let ids: Vec<&str> = tokens.collect();
                    if ids.is_empty() {
                        return Err(Error::Parse {
                            line,
                            message: "expected at least one vertex id".into(),
                        });
                    }
                    for id in ids {
                        if !valid_id(id) {
                            return Err(Error::Parse {
                                line,
                                message: format!("invalid vertex id `{id}`"),
                            });
                        }
                        vertices.push(id.to_string());
                    }
                }
                "arrow" => {
                    let rest = l["arrow".len()..].trim();
                    let (id_part, tail) = rest.split_once(':').ok_or(Error::Parse {
                        line,
                        message: "expected `arrow <id>: <src> -> <tgt>`".into(),
                    })?;
                    let id = id_part.trim();
                    let (src, tgt) = tail.split_once("->").ok_or(Error::Parse {
                        line,
                        message: "expected `<src> -> <tgt>` after `:`".into(),
                    })?;
                    let (src, tgt) = (src.trim(), tgt.trim());
                    if !valid_id(id) || !valid_id(src) || !valid_id(tgt) {
                        return Err(Error::Parse {
                            line,
                            message: format!("invalid id in arrow declaration `{l}`"),
                        });
                    }
                    arrows.push((id.to_string(), src.to_string(), tgt.to_string()));
                }
                "rel" => {
                    let ids: Vec<&str> = tokens.collect();
                    if ids.len() != 2 {
                        return Err(Error::Parse {
                            line,
                            message: "expected `rel <beta> <alpha>` (the composite βα of length 2)"
                                .into(),
                        });
                    }
                    relations.push((ids[0].to_string(), ids[1].to_string(), line));
                }
                other => {
                    return Err(Error::Parse {
                        line,
                        message: format!("unknown keyword `{other}`"),
                    });
                }
            }
        }
        let quiver = Quiver::new(vertices, arrows).map_err(|e| match e {
            Error::Parse { .. } => e,
            other => Error::Parse {
                line: 0,
                message: other.to_string(),
            },
        })?;
        let mut pairs = Vec::new();
        for (beta, alpha, line) in relations {
            if quiver.arrow_idx(&beta).is_none() {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown arrow `{beta}`"),
                });
            }
            if quiver.arrow_idx(&alpha).is_none() {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown arrow `{alpha}`"),
                });
            }
            let a = quiver.arrow_idx(&alpha).unwrap();
            let b = quiver.arrow_idx(&beta).unwrap();
            if quiver.arrow(a).target != quiver.arrow(b).source {
                return Err(Error::Parse {
                    line,
                    message: format!("relation `{beta} {alpha}` is not composable"),
                });
            }
            pairs.push((beta, alpha));
        }
        GentlePresentation::new(quiver, pairs)
    }

    /// Emit the `.quiver` format. `parse(serialize(p)) == p`.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for v in self.quiver.vertices() {
            out.push_str(&format!("vertex {v}\n"));
        }
        for a in self.quiver.arrows() {
            out.push_str(&format!(
                "arrow {}: {} -> {}\n",
                a.id,
                self.quiver.vertex_id(a.source),
                self.quiver.vertex_id(a.target)
            ));
        }
        for (beta, alpha) in self.relation_word_pairs() {
            out.push_str(&format!("rel {beta} {alpha}\n"));
        }
        out
    }
}

fn path_id_seq<'q>(p: &Path, q: &'q Quiver) -> Vec<&'q str> {
    match p {
        Path::Trivial(_) => Vec::new(),
        Path::Arrows(a) => a.iter().map(|&i| q.arrow(i).id.as_str()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn c3() -> GentlePresentation {
        GentlePresentation::parse(
            "vertex 1 2 3\n\
             arrow a: 1 -> 2\n\
             arrow b: 2 -> 3\n\
             arrow c: 3 -> 1\n\
             rel b a\n\
             rel c b\n\
             rel a c\n",
        )
        .unwrap()
    }

    fn a2() -> GentlePresentation {
        GentlePresentation::parse("vertex 1 2\narrow a: 1 -> 2\n").unwrap()
    }

    #[test]
    fn parse_c3() {
        let p = c3();
        assert_eq!(p.quiver().vertex_count(), 3);
        assert_eq!(p.quiver().arrow_count(), 3);
        assert_eq!(p.relations().len(), 3);
        assert!(p.validate_gentle().is_ok());
    }

    #[test]
    fn parse_vertices_only() {
        let p = GentlePresentation::parse("vertex 1 2 3\n").unwrap();
        assert_eq!(p.quiver().vertex_count(), 3);
        assert!(p.validate_gentle().is_ok());
    }

    #[test]
    fn parse_rejects_non_composable_relation() {
        let err =
            GentlePresentation::parse("vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrel a b\n")
                .unwrap_err();
        match err {
            Error::Parse { line, message } => {
                assert_eq!(line, 4);
                assert!(message.contains("not composable"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_duplicates_and_unknowns() {
        assert!(GentlePresentation::parse("vertex 1 1\n").is_err());
        assert!(GentlePresentation::parse("vertex 1\narrow a: 1 -> 2\n").is_err());
        assert!(GentlePresentation::parse("vertex 1\nfoo bar\n").is_err());
    }

    #[test]
    fn validate_flags_three_outgoing() {
        let p = GentlePresentation::parse(
            "vertex 0 1 2 3\narrow a: 0 -> 1\narrow b: 0 -> 2\narrow c: 0 -> 3\n",
        )
        .unwrap();
        let report = p.validate_gentle();
        assert!(report.violations.iter().any(
            |v| matches!(v, Violation::TooManyOutgoing { vertex, count: 3 } if vertex == "0")
        ));
    }

    #[test]
    fn validate_flags_relation_free_cycle() {
        let p = GentlePresentation::parse(
            "vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 1\n",
        )
        .unwrap();
        let report = p.validate_gentle();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::InfiniteDimensional { .. })));
        assert!(p.enumerate_nonzero_paths().is_err());
    }

    #[test]
    fn compose_hits_relations() {
        let p = c3();
        let a = Path::Arrows(vec![p.quiver().arrow_idx("a").unwrap()]);
        let b = Path::Arrows(vec![p.quiver().arrow_idx("b").unwrap()]);
        assert_eq!(p.compose(&b, &a).unwrap(), Composite::Zero);
        let e1 = Path::Trivial(0);
        assert_eq!(p.compose(&a, &e1).unwrap(), Composite::Path(a.clone()));
        assert!(p.compose(&a, &b).is_err());
    }

    #[test]
    fn compose_zero_is_stable() {
        // zero absorbs further composition on either side
        let p = GentlePresentation::parse(
            "vertex 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 4\nrel b a\n",
        )
        .unwrap();
        let q = p.quiver();
        let ba = Path::Arrows(vec![q.arrow_idx("a").unwrap(), q.arrow_idx("b").unwrap()]);
        let c = Path::Arrows(vec![q.arrow_idx("c").unwrap()]);
        assert_eq!(p.compose(&c, &ba).unwrap(), Composite::Zero);
    }

    #[test]
    fn compose_is_associative_on_nonzero_results() {
        let p = GentlePresentation::parse(
            "vertex 1 2 3 4 5\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 4\narrow d: 4 -> 5\nrel d c\n",
        )
        .unwrap();
        let paths = p.enumerate_nonzero_paths().unwrap();
        let q = p.quiver();
        for x in &paths {
            for y in &paths {
                if y.target(q) != x.source(q) {
                    continue;
                }
                for z in &paths {
                    if z.target(q) != y.source(q) {
                        continue;
                    }
                    let xy = p.compose(x, y).unwrap();
                    let yz = p.compose(y, z).unwrap();
                    let left = match &xy {
                        Composite::Path(path) => p.compose(path, z).unwrap(),
                        Composite::Zero => Composite::Zero,
                    };
                    let right = match &yz {
                        Composite::Path(path) => p.compose(x, path).unwrap(),
                        Composite::Zero => Composite::Zero,
                    };
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn nonzero_paths_a2_and_c3() {
        assert_eq!(a2().enumerate_nonzero_paths().unwrap().len(), 3);
        let paths = c3().enumerate_nonzero_paths().unwrap();
        assert_eq!(paths.len(), 6);
        // exactly the trivial paths and the three arrows
        assert!(paths.iter().all(|p| p.len() <= 1));
    }

    #[test]
    fn paths_closed_under_subpaths() {
        let p = GentlePresentation::parse(
            "vertex 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 4\nrel c b\n",
        )
        .unwrap();
        let paths: std::collections::HashSet<Path> =
            p.enumerate_nonzero_paths().unwrap().into_iter().collect();
        for path in &paths {
            if let Path::Arrows(arrows) = path {
                for i in 0..arrows.len() {
                    for j in i + 1..=arrows.len() {
                        let sub = Path::Arrows(arrows[i..j].to_vec());
                        assert!(paths.contains(&sub), "missing subpath of {arrows:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn schurian_examples() {
        assert!(c3().is_schurian().unwrap());
        assert!(a2().is_schurian().unwrap());
        let loop_p = GentlePresentation::parse("vertex 1\narrow a: 1 -> 1\nrel a a\n").unwrap();
        // two nonzero paths 1 -> 1 (trivial and the loop)
        assert!(!loop_p.is_schurian().unwrap());
    }

    #[test]
    fn serialize_round_trip() {
        for p in [c3(), a2()] {
            let text = p.serialize();
            assert_eq!(GentlePresentation::parse(&text).unwrap(), p);
        }
    }
}
