//! String modules over prime fields, Hom spaces, submodule enumeration,
//! Hall numbers `F^L_{MN} = #{U ⊆ L : U ≅ N, L/U ≅ M}`, Hall polynomials,
//! and the one-sided vanishing property.
//!
//! Everything is restricted to representation-finite algebras, where the
//! canonical strings index all indecomposables and module isomorphism is
//! decided by Hom-dimension counts against that list.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{lagrange_fit, IntPolynomial, RatMatrix};
use crate::quiver::GentlePresentation;
use crate::strings::{enumerate_strings, StringWord};

pub const DEFAULT_DIM_CAP: usize = 8;
pub const MAX_PRIME: u64 = 13;
pub const DEFAULT_FIT_PRIMES: [u64; 4] = [2, 3, 5, 7];
pub const DEFAULT_CHECK_PRIMES: [u64; 2] = [11, 13];
const SUBSPACE_BUDGET: u64 = 5_000_000;

/// Arithmetic modulo a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    pub fn new(q: u64) -> Result<Self> {
        if q < 2
            || (2..q)
                .take_while(|d| d * d <= q)
                .any(|d| q.is_multiple_of(d))
        {
            return Err(Error::NotPrime(q));
        }
        Ok(PrimeField { q })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }

    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.q - b % self.q) % self.q
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.q
    }

    fn inv(&self, a: u64) -> u64 {
        // Fermat; q is prime and a nonzero
        assert!(!a.is_multiple_of(self.q));
        let mut base = a % self.q;
        let mut exp = self.q - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

/// Dense matrix over a prime field, row major, entries reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FqMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl FqMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        FqMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = FqMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, f: &PrimeField, other: &FqMatrix) -> FqMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = FqMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = f.add(out[(i, j)], f.mul(a, other[(k, j)]));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, f: &PrimeField, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = 0;
                for j in 0..self.cols {
                    acc = f.add(acc, f.mul(self[(i, j)], v[j]));
                }
                acc
            })
            .collect()
    }

    /// In-place reduction to reduced row echelon form; returns the pivot
    /// columns.
    pub fn rref(&mut self, f: &PrimeField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let pivot = (r..self.rows).find(|&i| self[(i, c)] != 0);
            let pivot = match pivot {
                Some(p) => p,
                None => continue,
            };
            if pivot != r {
                for j in 0..self.cols {
                    let tmp = self[(pivot, j)];
                    self[(pivot, j)] = self[(r, j)];
                    self[(r, j)] = tmp;
                }
            }
            let inv = f.inv(self[(r, c)]);
            for j in 0..self.cols {
                self[(r, j)] = f.mul(self[(r, j)], inv);
            }
            for i in 0..self.rows {
                if i != r && self[(i, c)] != 0 {
                    let factor = self[(i, c)];
                    for j in 0..self.cols {
                        let sub = f.mul(factor, self[(r, j)]);
                        self[(i, j)] = f.sub(self[(i, j)], sub);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &PrimeField) -> usize {
        let mut m = self.clone();
        m.rref(f).len()
    }

    pub fn inverse(&self, f: &PrimeField) -> Option<FqMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = FqMatrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = 1;
        }
        let pivots = aug.rref(f);
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        let mut inv = FqMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)];
            }
        }
        Some(inv)
    }
}

impl std::ops::Index<(usize, usize)> for FqMatrix {
    type Output = u64;
    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for FqMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u64 {
        &mut self.data[i * self.cols + j]
    }
}

/// A finite-dimensional module: one space per vertex and one matrix per
/// arrow, satisfying every relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub q: u64,
    pub dims: Vec<usize>,
    pub mats: Vec<FqMatrix>,
}

impl Representation {
    pub fn zero_module(p: &GentlePresentation, f: &PrimeField) -> Self {
        let dims = vec![0; p.quiver().vertex_count()];
        let mats = p
            .quiver()
            .arrows()
            .iter()
            .map(|_| FqMatrix::zero(0, 0))
            .collect();
        Representation {
            q: f.q(),
            dims,
            mats,
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Check matrix shapes and that every relation composes to zero.
    pub fn verify(&self, p: &GentlePresentation, f: &PrimeField) -> Result<()> {
        let quiver = p.quiver();
        for (i, a) in quiver.arrows().iter().enumerate() {
            let m = &self.mats[i];
            if m.rows != self.dims[a.target] || m.cols != self.dims[a.source] {
                return Err(Error::Domain(format!(
                    "arrow {} matrix has shape {}x{}, expected {}x{}",
                    a.id, m.rows, m.cols, self.dims[a.target], self.dims[a.source]
                )));
            }
        }
        for &(first, second) in p.relations() {
            let prod = self.mats[second].mul(f, &self.mats[first]);
            if !prod.is_zero() {
                return Err(Error::Domain(format!(
                    "relation {} {} is not annihilated",
                    quiver.arrow(second).id,
                    quiver.arrow(first).id
                )));
            }
        }
        Ok(())
    }

    /// Direct sum, block diagonal in the given order.
    pub fn direct_sum(&self, p: &GentlePresentation, other: &Representation) -> Representation {
        assert_eq!(self.q, other.q);
        let quiver = p.quiver();
        let dims: Vec<usize> = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let mats = quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let (m1, m2) = (&self.mats[i], &other.mats[i]);
                let mut m = FqMatrix::zero(dims[a.target], dims[a.source]);
                for r in 0..m1.rows {
                    for c in 0..m1.cols {
                        m[(r, c)] = m1[(r, c)];
                    }
                }
                for r in 0..m2.rows {
                    for c in 0..m2.cols {
                        m[(m1.rows + r, m1.cols + c)] = m2[(r, c)];
                    }
                }
                m
            })
            .collect();
        Representation {
            q: self.q,
            dims,
            mats,
        }
    }
}

/// The string module `M(w)`: basis `z_0, …, z_n` at the visited vertices,
/// each direct letter sending `z_i ↦ z_{i−1}` and each inverse letter
/// sending `z_{i−1} ↦ z_i`.
pub fn string_module(
    p: &GentlePresentation,
    w: &StringWord,
    f: &PrimeField,
) -> Result<Representation> {
    if !crate::strings::is_string(p, w) {
        return Err(Error::NotAString(w.display(p.quiver())));
    }
    let quiver = p.quiver();
    let visited = w.visited(quiver);
    let mut dims = vec![0usize; quiver.vertex_count()];
    let mut offset = Vec::with_capacity(visited.len());
    for &v in &visited {
        offset.push(dims[v]);
        dims[v] += 1;
    }
    let mut mats: Vec<FqMatrix> = quiver
        .arrows()
        .iter()
        .map(|a| FqMatrix::zero(dims[a.target], dims[a.source]))
        .collect();
    if let StringWord::Letters(ls) = w {
        for (idx, letter) in ls.iter().enumerate() {
            // letter c_{i} with i = idx + 1 joins slots i-1 and i
            let (hi, lo) = (idx, idx + 1);
            let m = &mut mats[letter.arrow];
            if letter.inverse {
                // arrow runs u(i-1) -> u(i)
                m[(offset[lo], offset[hi])] = 1;
            } else {
                // arrow runs u(i) -> u(i-1)
                m[(offset[hi], offset[lo])] = 1;
            }
        }
    }
    let rep = Representation {
        q: f.q(),
        dims,
        mats,
    };
    rep.verify(p, f)?;
    Ok(rep)
}

/// Dimension of the intertwiner space `Hom(X, Y)`: solutions of
/// `f_{t(a)} X_a = Y_a f_{s(a)}` for every arrow `a`.
pub fn hom_dimension(
    p: &GentlePresentation,
    f: &PrimeField,
    x: &Representation,
    y: &Representation,
) -> usize {
    let quiver = p.quiver();
    let n = quiver.vertex_count();
    let mut var_offset = vec![0usize; n + 1];
    for v in 0..n {
        var_offset[v + 1] = var_offset[v] + y.dims[v] * x.dims[v];
    }
    let unknowns = var_offset[n];
    if unknowns == 0 {
        return 0;
    }
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (ai, a) in quiver.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let xa = &x.mats[ai];
        let ya = &y.mats[ai];
        for i in 0..y.dims[t] {
            for j in 0..x.dims[s] {
                let mut row = vec![0u64; unknowns];
                // Σ_k f_t[i,k] X_a[k,j]
                for k in 0..x.dims[t] {
                    let var = var_offset[t] + i * x.dims[t] + k;
                    row[var] = f.add(row[var], xa[(k, j)]);
                }
                // − Σ_k Y_a[i,k] f_s[k,j]
                for k in 0..y.dims[s] {
                    let var = var_offset[s] + k * x.dims[s] + j;
                    row[var] = f.sub(row[var], ya[(i, k)]);
                }
                if row.iter().any(|&e| e != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let rank = if rows.is_empty() {
        0
    } else {
        let mut m = FqMatrix {
            rows: rows.len(),
            cols: unknowns,
            data: rows.into_iter().flatten().collect(),
        };
        m.rref(f).len()
    };
    unknowns - rank
}

/// A vertex-graded subspace tuple, each space as an RREF basis matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubRep {
    pub bases: Vec<FqMatrix>,
    pub pivots: Vec<Vec<usize>>,
}

impl SubRep {
    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(|b| b.rows).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.bases.iter().map(|b| b.rows).sum()
    }
}

/// All subspaces of `F_q^d` as RREF basis matrices (the zero subspace is
/// the 0×d matrix).
fn enumerate_subspaces(f: &PrimeField, d: usize) -> Vec<(FqMatrix, Vec<usize>)> {
    let mut out = Vec::new();
    for k in 0..=d {
        let mut pivots: Vec<usize> = (0..k).collect();
        loop {
            // free positions: (r, c) with c > pivots[r], c not a pivot
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| {
                    let pivots = pivots.clone();
                    (pivots[r] + 1..d)
                        .filter(move |c| !pivots.contains(c))
                        .map(move |c| (r, c))
                })
                .collect();
            let mut assignment = vec![0u64; free.len()];
            loop {
                let mut m = FqMatrix::zero(k, d);
                for r in 0..k {
                    m[(r, pivots[r])] = 1;
                }
                for (slot, &(r, c)) in free.iter().enumerate() {
                    m[(r, c)] = assignment[slot];
                }
                out.push((m, pivots.clone()));
                // odometer over F_q^free
                let mut carry = true;
                for slot in assignment.iter_mut() {
                    *slot += 1;
                    if *slot == f.q() {
                        *slot = 0;
                    } else {
                        carry = false;
                        break;
                    }
                }
                if carry {
                    break;
                }
            }
            // next pivot combination
            if !next_combination(&mut pivots, d) {
                break;
            }
        }
    }
    out
}

fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] < n - (k - i) {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn count_subspaces(q: u64, d: usize) -> u64 {
    // Galois number: Σ_k gaussian binomial [d choose k]_q
    let mut total = 0u64;
    for k in 0..=d {
        let mut num = 1u64;
        let mut den = 1u64;
        for i in 0..k {
            num = num.saturating_mul(pow_sat(q, d - i).saturating_sub(1));
            den = den.saturating_mul(pow_sat(q, i + 1).saturating_sub(1));
        }
        total = total.saturating_add(num.checked_div(den).unwrap_or(u64::MAX));
    }
    total
}

fn pow_sat(q: u64, e: usize) -> u64 {
    let mut acc = 1u64;
    for _ in 0..e {
        acc = acc.saturating_mul(q);
    }
    acc
}

/// Reduce `v` against an RREF basis; returns the residual.
fn reduce(f: &PrimeField, basis: &FqMatrix, pivots: &[usize], v: &[u64]) -> Vec<u64> {
    let mut v = v.to_vec();
    for (r, &pc) in pivots.iter().enumerate() {
        let coef = v[pc];
        if coef != 0 {
            for j in 0..basis.cols {
                let sub = f.mul(coef, basis[(r, j)]);
                v[j] = f.sub(v[j], sub);
            }
        }
    }
    v
}

fn in_rowspace(f: &PrimeField, basis: &FqMatrix, pivots: &[usize], v: &[u64]) -> bool {
    reduce(f, basis, pivots, v).iter().all(|&x| x == 0)
}

/// All submodules of `L`: vertex-graded subspace tuples closed under every
/// arrow. Includes the zero submodule and `L` itself.
pub fn enumerate_submodules(
    p: &GentlePresentation,
    f: &PrimeField,
    l: &Representation,
    dim_cap: usize,
) -> Result<Vec<SubRep>> {
    if l.total_dim() > dim_cap {
        return Err(Error::CapExceeded {
            what: format!("module dimension {}", l.total_dim()),
            cap: dim_cap,
        });
    }
    let mut budget = 1u64;
    for &d in &l.dims {
        budget = budget.saturating_mul(count_subspaces(f.q(), d));
    }
    if budget > SUBSPACE_BUDGET {
        return Err(Error::CapExceeded {
            what: format!("subspace tuples {budget}"),
            cap: SUBSPACE_BUDGET as usize,
        });
    }
    let per_vertex: Vec<Vec<(FqMatrix, Vec<usize>)>> =
        l.dims.iter().map(|&d| enumerate_subspaces(f, d)).collect();
    let quiver = p.quiver();
    let mut out = Vec::new();
    let mut choice = vec![0usize; l.dims.len()];
    'outer: loop {
        let closed = quiver.arrows().iter().enumerate().all(|(ai, a)| {
            let (sb, _) = &per_vertex[a.source][choice[a.source]];
            let (tb, tp) = &per_vertex[a.target][choice[a.target]];
            (0..sb.rows).all(|r| {
                let image = l.mats[ai].mul_vec(f, sb.row(r));
                in_rowspace(f, tb, tp, &image)
            })
        });
        if closed {
            out.push(SubRep {
                bases: choice
                    .iter()
                    .enumerate()
                    .map(|(v, &c)| per_vertex[v][c].0.clone())
                    .collect(),
                pivots: choice
                    .iter()
                    .enumerate()
                    .map(|(v, &c)| per_vertex[v][c].1.clone())
                    .collect(),
            });
        }
        // odometer over the per-vertex subspace lists
        for v in 0..choice.len() {
            choice[v] += 1;
            if choice[v] < per_vertex[v].len() {
                continue 'outer;
            }
            choice[v] = 0;
        }
        break;
    }
    Ok(out)
}

/// The submodule itself as a representation, in its RREF basis.
pub fn sub_to_rep(
    p: &GentlePresentation,
    f: &PrimeField,
    l: &Representation,
    u: &SubRep,
) -> Representation {
    let quiver = p.quiver();
    let dims = u.dims();
    let mats = quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let sb = &u.bases[a.source];
            let tb = &u.bases[a.target];
            let tp = &u.pivots[a.target];
            let mut m = FqMatrix::zero(dims[a.target], dims[a.source]);
            for c in 0..sb.rows {
                let image = l.mats[ai].mul_vec(f, sb.row(c));
                // RREF coefficients are read off at the pivot columns
                for (r, &pc) in tp.iter().enumerate() {
                    m[(r, c)] = image[pc];
                }
                debug_assert!(in_rowspace(f, tb, tp, &image));
            }
            m
        })
        .collect();
    Representation {
        q: f.q(),
        dims,
        mats,
    }
}

/// The quotient `L/U` in the complement coordinates of the pivot columns.
pub fn quotient(
    p: &GentlePresentation,
    f: &PrimeField,
    l: &Representation,
    u: &SubRep,
) -> Representation {
    let quiver = p.quiver();
    let complements: Vec<Vec<usize>> = (0..l.dims.len())
        .map(|v| {
            (0..l.dims[v])
                .filter(|c| !u.pivots[v].contains(c))
                .collect()
        })
        .collect();
    let dims: Vec<usize> = complements.iter().map(|c| c.len()).collect();
    let mats = quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m = FqMatrix::zero(dims[a.target], dims[a.source]);
            for (c, &src_col) in complements[a.source].iter().enumerate() {
                let mut e = vec![0u64; l.dims[a.source]];
                e[src_col] = 1;
                let image = l.mats[ai].mul_vec(f, &e);
                let reduced = reduce(f, &u.bases[a.target], &u.pivots[a.target], &image);
                for (r, &tgt_col) in complements[a.target].iter().enumerate() {
                    m[(r, c)] = reduced[tgt_col];
                }
            }
            m
        })
        .collect();
    Representation {
        q: f.q(),
        dims,
        mats,
    }
}

/// A module up to isomorphism: canonical strings with multiplicities,
/// indexed into a [`HallContext`] string list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IsoClass {
    pub parts: BTreeMap<usize, usize>,
}

impl IsoClass {
    pub fn total_multiplicity(&self) -> usize {
        self.parts.values().sum()
    }
}

/// Precomputed data for Hall computations over one algebra and one prime:
/// the canonical string list, their modules, and the inverted
/// Hom-dimension matrix used to decompose arbitrary modules.
pub struct HallContext {
    pub presentation: GentlePresentation,
    pub field: PrimeField,
    pub strings: Vec<StringWord>,
    pub modules: Vec<Representation>,
    pub dim_vectors: Vec<Vec<usize>>,
    hom_inv: RatMatrix,
    pub dim_cap: usize,
    product_cache: RefCell<HashMap<(IsoClass, IsoClass), BTreeMap<IsoClass, u64>>>,
}

impl HallContext {
    pub fn new(p: &GentlePresentation, q: u64, dim_cap: usize) -> Result<Self> {
        if q > MAX_PRIME {
            return Err(Error::CapExceeded {
                what: format!("prime {q}"),
                cap: MAX_PRIME as usize,
            });
        }
        let field = PrimeField::new(q)?;
        let strings = enumerate_strings(p)?;
        let modules: Vec<Representation> = strings
            .iter()
            .map(|w| string_module(p, w, &field))
            .collect::<Result<_>>()?;
        let dim_vectors = strings
            .iter()
            .map(|w| crate::strings::dimension_vector(p, w))
            .collect();
        let n = strings.len();
        let mut hom = RatMatrix::zero(n, n);
        for j in 0..n {
            for i in 0..n {
                hom[(j, i)] = BigRational::from_integer(BigInt::from(hom_dimension(
                    p,
                    &field,
                    &modules[i],
                    &modules[j],
                )));
            }
        }
        let hom_inv = hom.inverse().map_err(|_| Error::SingularHomMatrix)?;
        Ok(HallContext {
            presentation: p.clone(),
            field,
            strings,
            modules,
            dim_vectors,
            hom_inv,
            dim_cap,
            product_cache: RefCell::new(HashMap::new()),
        })
    }

    pub fn string_index(&self, w: &StringWord) -> Result<usize> {
        let canonical = crate::strings::canonical_string(&self.presentation, w);
        self.strings
            .iter()
            .position(|s| *s == canonical)
            .ok_or_else(|| Error::NotAString(w.display(self.presentation.quiver())))
    }

    pub fn iso_class(&self, words: &[StringWord]) -> Result<IsoClass> {
        let mut parts = BTreeMap::new();
        for w in words {
            *parts.entry(self.string_index(w)?).or_insert(0) += 1;
        }
        Ok(IsoClass { parts })
    }

    pub fn display_class(&self, class: &IsoClass) -> String {
        if class.parts.is_empty() {
            return "0".to_string();
        }
        class
            .parts
            .iter()
            .map(|(&i, &m)| {
                let s = self.strings[i].display(self.presentation.quiver());
                if m == 1 {
                    s
                } else {
                    format!("{m}*({s})")
                }
            })
            .collect::<Vec<_>>()
            .join(" ; ")
    }

    pub fn class_dim_vector(&self, class: &IsoClass) -> Vec<usize> {
        let mut dims = vec![0usize; self.presentation.quiver().vertex_count()];
        for (&i, &m) in &class.parts {
            for (v, &d) in self.dim_vectors[i].iter().enumerate() {
                dims[v] += d * m;
            }
        }
        dims
    }

    /// Block-diagonal realization of an isomorphism class.
    pub fn realization(&self, class: &IsoClass) -> Representation {
        let mut rep = Representation::zero_module(&self.presentation, &self.field);
        for (&i, &m) in &class.parts {
            for _ in 0..m {
                rep = rep.direct_sum(&self.presentation, &self.modules[i]);
            }
        }
        rep
    }

    /// Multiplicities of each indecomposable in `x`, solved from the
    /// Hom-dimension system and verified against the dimension vector.
    pub fn decompose(&self, x: &Representation) -> Result<IsoClass> {
        let n = self.strings.len();
        let h: Vec<BigRational> = (0..n)
            .map(|j| {
                BigRational::from_integer(BigInt::from(hom_dimension(
                    &self.presentation,
                    &self.field,
                    x,
                    &self.modules[j],
                )))
            })
            .collect();
        let mut parts = BTreeMap::new();
        for i in 0..n {
            let mut acc = BigRational::zero();
            for (j, hj) in h.iter().enumerate() {
                acc += &self.hom_inv[(i, j)] * hj;
            }
            if acc.is_zero() {
                continue;
            }
            if !acc.is_integer() || acc.is_negative() {
                return Err(Error::InconsistentDecomposition(format!(
                    "multiplicity {acc} of {}",
                    self.strings[i].display(self.presentation.quiver())
                )));
            }
            let m: usize = acc
                .to_integer()
                .try_into()
                .map_err(|_| Error::InconsistentDecomposition("overflow".into()))?;
            parts.insert(i, m);
        }
        let class = IsoClass { parts };
        if self.class_dim_vector(&class) != x.dims {
            return Err(Error::InconsistentDecomposition(
                "dimension vectors disagree".into(),
            ));
        }
        Ok(class)
    }

    /// `F^L_{MN}`: submodules of (a realization of) `L` isomorphic to `N`
    /// with quotient isomorphic to `M`.
    pub fn hall_number(&self, l: &IsoClass, m: &IsoClass, n: &IsoClass) -> Result<u64> {
        let l_rep = self.realization(l);
        if self
            .class_dim_vector(m)
            .iter()
            .zip(self.class_dim_vector(n).iter())
            .zip(l_rep.dims.iter())
            .any(|((a, b), c)| a + b != *c)
        {
            return Ok(0);
        }
        let n_dims = self.class_dim_vector(n);
        let mut count = 0;
        for sub in enumerate_submodules(&self.presentation, &self.field, &l_rep, self.dim_cap)? {
            if sub.dims() != n_dims {
                continue;
            }
            let u = sub_to_rep(&self.presentation, &self.field, &l_rep, &sub);
            if self.decompose(&u)? != *n {
                continue;
            }
            let quot = quotient(&self.presentation, &self.field, &l_rep, &sub);
            if self.decompose(&quot)? == *m {
                count += 1;
            }
        }
        Ok(count)
    }

    /// Counts of every (quotient class, submodule class) pair over all
    /// submodules of a realization of `l`.
    pub fn submodule_profile(&self, l: &IsoClass) -> Result<BTreeMap<(IsoClass, IsoClass), u64>> {
        let l_rep = self.realization(l);
        let mut profile = BTreeMap::new();
        for sub in enumerate_submodules(&self.presentation, &self.field, &l_rep, self.dim_cap)? {
            let u = sub_to_rep(&self.presentation, &self.field, &l_rep, &sub);
            let n_class = self.decompose(&u)?;
            let quot = quotient(&self.presentation, &self.field, &l_rep, &sub);
            let m_class = self.decompose(&quot)?;
            *profile.entry((m_class, n_class)).or_insert(0) += 1;
        }
        Ok(profile)
    }

    /// All multisets of indecomposables with the given dimension vector.
    pub fn classes_with_dim_vector(&self, target: &[usize]) -> Vec<IsoClass> {
        let mut out = Vec::new();
        let mut current = BTreeMap::new();
        self.dim_search(target.to_vec(), 0, &mut current, &mut out);
        out
    }

    fn dim_search(
        &self,
        remaining: Vec<usize>,
        from: usize,
        current: &mut BTreeMap<usize, usize>,
        out: &mut Vec<IsoClass>,
    ) {
        if remaining.iter().all(|&d| d == 0) {
            out.push(IsoClass {
                parts: current.clone(),
            });
            return;
        }
        for i in from..self.strings.len() {
            let dv = &self.dim_vectors[i];
            if dv.iter().zip(&remaining).all(|(d, r)| d <= r) {
                let next: Vec<usize> = remaining.iter().zip(dv).map(|(r, d)| r - d).collect();
                *current.entry(i).or_insert(0) += 1;
                self.dim_search(next, i, current, out);
                let e = current.get_mut(&i).unwrap();
                *e -= 1;
                if *e == 0 {
                    current.remove(&i);
                }
            }
        }
    }

    /// The formal sum `u_M · u_N = Σ_L F^L_{MN} u_L`, nonzero terms only.
    /// Results are memoized per context.
    pub fn hall_product(&self, m: &IsoClass, n: &IsoClass) -> Result<BTreeMap<IsoClass, u64>> {
        let key = (m.clone(), n.clone());
        if let Some(cached) = self.product_cache.borrow().get(&key) {
            return Ok(cached.clone());
        }
        let target: Vec<usize> = self
            .class_dim_vector(m)
            .iter()
            .zip(self.class_dim_vector(n).iter())
            .map(|(a, b)| a + b)
            .collect();
        let mut out = BTreeMap::new();
        for l in self.classes_with_dim_vector(&target) {
            let coeff = self.hall_number(&l, m, n)?;
            if coeff > 0 {
                out.insert(l, coeff);
            }
        }
        self.product_cache.borrow_mut().insert(key, out.clone());
        Ok(out)
    }

    /// Product of formal sums, extending `hall_product` linearly.
    pub fn product_of_sums(
        &self,
        a: &BTreeMap<IsoClass, u64>,
        b: &BTreeMap<IsoClass, u64>,
    ) -> Result<BTreeMap<IsoClass, u64>> {
        let mut out: BTreeMap<IsoClass, u64> = BTreeMap::new();
        for (la, ca) in a {
            for (lb, cb) in b {
                for (l, c) in self.hall_product(la, lb)? {
                    *out.entry(l).or_insert(0) += ca * cb * c;
                }
            }
        }
        Ok(out)
    }
}

/// Outcome of the one-sided vanishing sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingReport {
    pub modules_checked: usize,
    pub violations: Vec<String>,
}

impl VanishingReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For every indecomposable `M` of total dimension within the cap, verify
/// there is no pair of short exact sequences realizing both `F^M_{NL}` and
/// `F^M_{LN}` with `L` indecomposable.
pub fn one_sided_vanishing_report(
    p: &GentlePresentation,
    q: u64,
    dim_cap: usize,
) -> Result<VanishingReport> {
    let ctx = HallContext::new(p, q, dim_cap)?;
    let mut violations = Vec::new();
    let mut checked = 0;
    for (mi, m_word) in ctx.strings.iter().enumerate() {
        if ctx.modules[mi].total_dim() > dim_cap {
            continue;
        }
        checked += 1;
        let m_class = IsoClass {
            parts: [(mi, 1)].into_iter().collect(),
        };
        let profile = ctx.submodule_profile(&m_class)?;
        for ((quot, sub), &count) in &profile {
            if count == 0 {
                continue;
            }
            // the property constrains pairs where the submodule is
            // indecomposable; the split pair U = M, N = 0 is not a
            // reordering and is excluded
            let l_is_ind = sub.parts.len() == 1 && sub.parts.values().all(|&m| m == 1);
            if !l_is_ind {
                continue;
            }
            if quot.parts.is_empty() && *sub == m_class {
                continue;
            }
            let swapped = (sub.clone(), quot.clone());
            if profile.get(&swapped).copied().unwrap_or(0) > 0 {
                violations.push(format!(
                    "M={} L={} N={}",
                    m_word.display(p.quiver()),
                    ctx.display_class(sub),
                    ctx.display_class(quot)
                ));
            }
        }
    }
    violations.sort();
    violations.dedup();
    Ok(VanishingReport {
        modules_checked: checked,
        violations,
    })
}

/// Fit a Hall polynomial through counts at `fit_primes` and verify it at
/// `check_primes`; coefficients must be integers.
pub fn hall_polynomial(
    p: &GentlePresentation,
    l: &[StringWord],
    m: &[StringWord],
    n: &[StringWord],
    fit_primes: &[u64],
    check_primes: &[u64],
    dim_cap: usize,
) -> Result<IntPolynomial> {
    let mut points = Vec::new();
    for &q in fit_primes {
        let ctx = HallContext::new(p, q, dim_cap)?;
        let count = ctx.hall_number(&ctx.iso_class(l)?, &ctx.iso_class(m)?, &ctx.iso_class(n)?)?;
        points.push((BigInt::from(q), BigInt::from(count)));
    }
    let poly = lagrange_fit(&points)?;
    for &q in check_primes {
        let ctx = HallContext::new(p, q, dim_cap)?;
        let count = ctx.hall_number(&ctx.iso_class(l)?, &ctx.iso_class(m)?, &ctx.iso_class(n)?)?;
        let predicted = poly.eval_int(&BigInt::from(q));
        if predicted != BigInt::from(count) {
            return Err(Error::InsufficientSampleDegree {
                q,
                predicted: predicted.to_string(),
                actual: count.to_string(),
            });
        }
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cm::cm_auslander;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn a2() -> GentlePresentation {
        GentlePresentation::parse("vertex 1 2\narrow a: 1 -> 2\n").unwrap()
    }

    fn c3() -> GentlePresentation {
        GentlePresentation::parse(
            "vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 1\nrel b a\nrel c b\nrel a c\n",
        )
        .unwrap()
    }

    fn word(p: &GentlePresentation, s: &str) -> StringWord {
        StringWord::parse(p, s).unwrap()
    }

    #[test]
    fn prime_field_checks() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(13).is_ok());
        assert!(matches!(PrimeField::new(1), Err(Error::NotPrime(1))));
        assert!(matches!(PrimeField::new(6), Err(Error::NotPrime(6))));
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn string_modules() {
        let p = a2();
        let f = PrimeField::new(5).unwrap();
        let simple = string_module(&p, &StringWord::trivial(0), &f).unwrap();
        assert_eq!(simple.dims, vec![1, 0]);
        let proj = string_module(&p, &word(&p, "a"), &f).unwrap();
        assert_eq!(proj.dims, vec![1, 1]);
        assert_eq!(proj.mats[0][(0, 0)], 1);

        let hex = cm_auslander(&c3()).unwrap();
        let m = string_module(&hex, &word(&hex, "a-,a+"), &f).unwrap();
        assert_eq!(m.total_dim(), 3);
        m.verify(&hex, &f).unwrap();
    }

    #[test]
    fn hom_dimensions() {
        let p = a2();
        let f = PrimeField::new(3).unwrap();
        let s1 = string_module(&p, &StringWord::trivial(0), &f).unwrap();
        let s2 = string_module(&p, &StringWord::trivial(1), &f).unwrap();
        let p1 = string_module(&p, &word(&p, "a"), &f).unwrap();
        assert_eq!(hom_dimension(&p, &f, &s1, &s1), 1);
        assert_eq!(hom_dimension(&p, &f, &p1, &s1), 1);
        assert_eq!(hom_dimension(&p, &f, &s1, &p1), 0);
        assert_eq!(hom_dimension(&p, &f, &s2, &p1), 1);
    }

    #[test]
    fn hom_dimensions_do_not_depend_on_the_prime() {
        let hex = cm_auslander(&c3()).unwrap();
        for algebra in [a2(), c3(), hex] {
            let mut tables = Vec::new();
            for q in [2u64, 3, 5] {
                let f = PrimeField::new(q).unwrap();
                let strings = crate::strings::enumerate_strings(&algebra).unwrap();
                let modules: Vec<Representation> = strings
                    .iter()
                    .map(|w| string_module(&algebra, w, &f).unwrap())
                    .collect();
                let table: Vec<Vec<usize>> = modules
                    .iter()
                    .map(|x| {
                        modules
                            .iter()
                            .map(|y| hom_dimension(&algebra, &f, x, y))
                            .collect()
                    })
                    .collect();
                tables.push(table);
            }
            assert_eq!(tables[0], tables[1]);
            assert_eq!(tables[1], tables[2]);
        }
    }

    #[test]
    fn decompose_examples() {
        let p = a2();
        let ctx = HallContext::new(&p, 3, 8).unwrap();
        let p1 = ctx.iso_class(&[word(&p, "a")]).unwrap();
        // a module decomposes as itself
        let x = ctx.realization(&p1);
        assert_eq!(ctx.decompose(&x).unwrap(), p1);
        // S1 ⊕ S1
        let two_s1 = ctx
            .iso_class(&[StringWord::trivial(0), StringWord::trivial(0)])
            .unwrap();
        let x = ctx.realization(&two_s1);
        assert_eq!(ctx.decompose(&x).unwrap(), two_s1);
        // P1 ⊕ S2
        let mixed = ctx
            .iso_class(&[word(&p, "a"), StringWord::trivial(1)])
            .unwrap();
        let x = ctx.realization(&mixed);
        assert_eq!(ctx.decompose(&x).unwrap(), mixed);
    }

    #[test]
    fn submodule_counts() {
        let p = a2();
        let f = PrimeField::new(2).unwrap();
        let s1 = string_module(&p, &StringWord::trivial(0), &f).unwrap();
        assert_eq!(enumerate_submodules(&p, &f, &s1, 8).unwrap().len(), 2);
        let p1 = string_module(&p, &word(&p, "a"), &f).unwrap();
        assert_eq!(enumerate_submodules(&p, &f, &p1, 8).unwrap().len(), 3);
        let two_s1 = s1.direct_sum(&p, &s1);
        assert_eq!(enumerate_submodules(&p, &f, &two_s1, 8).unwrap().len(), 5);
    }

    #[test]
    fn quotient_examples() {
        let p = a2();
        let f = PrimeField::new(3).unwrap();
        let p1 = string_module(&p, &word(&p, "a"), &f).unwrap();
        let subs = enumerate_submodules(&p, &f, &p1, 8).unwrap();
        let ctx = HallContext::new(&p, 3, 8).unwrap();
        for sub in subs {
            let u = sub_to_rep(&p, &f, &p1, &sub);
            let quot = quotient(&p, &f, &p1, &sub);
            assert_eq!(u.total_dim() + quot.total_dim(), p1.total_dim());
            match sub.total_dim() {
                0 => assert_eq!(ctx.decompose(&quot).unwrap(), ctx.decompose(&p1).unwrap()),
                2 => assert!(ctx.decompose(&quot).unwrap().parts.is_empty()),
                1 => {
                    // the socle S2; quotient is S1
                    let s1 = ctx.iso_class(&[StringWord::trivial(0)]).unwrap();
                    let s2 = ctx.iso_class(&[StringWord::trivial(1)]).unwrap();
                    assert_eq!(ctx.decompose(&u).unwrap(), s2);
                    assert_eq!(ctx.decompose(&quot).unwrap(), s1);
                }
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn hall_numbers_on_a2() {
        for q in [2, 3, 5] {
            let p = a2();
            let ctx = HallContext::new(&p, q, 8).unwrap();
            let s1 = ctx.iso_class(&[StringWord::trivial(0)]).unwrap();
            let s2 = ctx.iso_class(&[StringWord::trivial(1)]).unwrap();
            let p1 = ctx.iso_class(&[word(&p, "a")]).unwrap();
            assert_eq!(ctx.hall_number(&p1, &s1, &s2).unwrap(), 1);
            assert_eq!(ctx.hall_number(&p1, &s2, &s1).unwrap(), 0);
            // L = P1 ⊕ S2
            let l = ctx
                .iso_class(&[word(&p, "a"), StringWord::trivial(1)])
                .unwrap();
            assert_eq!(ctx.hall_number(&l, &p1, &s2).unwrap(), q);
            let m = ctx
                .iso_class(&[StringWord::trivial(0), StringWord::trivial(1)])
                .unwrap();
            assert_eq!(ctx.hall_number(&l, &m, &s2).unwrap(), 1);
            // zero submodule only
            assert_eq!(ctx.hall_number(&p1, &p1, &IsoClass::default()).unwrap(), 1);
            assert_eq!(ctx.hall_number(&p1, &s1, &IsoClass::default()).unwrap(), 0);
        }
    }

    #[test]
    fn hall_products_on_a2() {
        let p = a2();
        let ctx = HallContext::new(&p, 2, 8).unwrap();
        let s1 = ctx.iso_class(&[StringWord::trivial(0)]).unwrap();
        let s2 = ctx.iso_class(&[StringWord::trivial(1)]).unwrap();
        let p1 = ctx.iso_class(&[word(&p, "a")]).unwrap();
        let both = ctx
            .iso_class(&[StringWord::trivial(0), StringWord::trivial(1)])
            .unwrap();
        let prod = ctx.hall_product(&s1, &s2).unwrap();
        assert_eq!(prod.len(), 2);
        assert_eq!(prod.get(&p1), Some(&1));
        assert_eq!(prod.get(&both), Some(&1));
        let prod = ctx.hall_product(&s2, &s1).unwrap();
        assert_eq!(prod.len(), 1);
        assert_eq!(prod.get(&both), Some(&1));
        // unit law
        let unit = IsoClass::default();
        let prod = ctx.hall_product(&unit, &p1).unwrap();
        assert_eq!(prod.len(), 1);
        assert_eq!(prod.get(&p1), Some(&1));
    }

    #[test]
    fn hall_polynomial_examples() {
        let p = a2();
        let s1 = vec![StringWord::trivial(0)];
        let s2 = vec![StringWord::trivial(1)];
        let p1 = vec![word(&p, "a")];
        let poly = hall_polynomial(&p, &p1, &s1, &s2, &[2, 3, 5, 7], &[11, 13], 8).unwrap();
        assert_eq!(poly, IntPolynomial::one());
        let l = vec![word(&p, "a"), StringWord::trivial(1)];
        let poly = hall_polynomial(&p, &l, &p1, &s2, &[2, 3, 5, 7], &[11, 13], 8).unwrap();
        assert_eq!(poly, IntPolynomial::x());
        let poly = hall_polynomial(&p, &p1, &s2, &s1, &[2, 3, 5, 7], &[11, 13], 8).unwrap();
        assert!(poly.is_zero());
    }

    #[test]
    fn hall_product_is_associative_on_the_triangle_algebra() {
        let p = c3();
        let ctx = HallContext::new(&p, 2, 8).unwrap();
        let n = ctx.strings.len();
        let singleton = |i: usize| IsoClass {
            parts: [(i, 1)].into_iter().collect(),
        };
        let dims: Vec<usize> = ctx.modules.iter().map(|m| m.total_dim()).collect();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if dims[i] + dims[j] + dims[k] > 5 {
                        continue;
                    }
                    let (ui, uj, uk) = (singleton(i), singleton(j), singleton(k));
                    let ij = ctx.hall_product(&ui, &uj).unwrap();
                    let jk = ctx.hall_product(&uj, &uk).unwrap();
                    let lhs = ctx
                        .product_of_sums(&ij, &[(uk, 1)].into_iter().collect())
                        .unwrap();
                    let rhs = ctx
                        .product_of_sums(&[(ui, 1)].into_iter().collect(), &jk)
                        .unwrap();
                    assert_eq!(lhs, rhs, "triple ({i},{j},{k})");
                }
            }
        }
    }

    #[test]
    fn counting_identity() {
        // total submodule count equals the sum of all Hall numbers
        let p = c3();
        let ctx = HallContext::new(&p, 2, 8).unwrap();
        let l = ctx
            .iso_class(&[word(&p, "a"), StringWord::trivial(2)])
            .unwrap();
        let profile = ctx.submodule_profile(&l).unwrap();
        let total: u64 = profile.values().sum();
        let l_rep = ctx.realization(&l);
        let subs = enumerate_submodules(&p, &ctx.field, &l_rep, 8).unwrap();
        assert_eq!(total, subs.len() as u64);
    }

    #[test]
    fn vanishing_reports_are_clean() {
        let report = one_sided_vanishing_report(&a2(), 3, 2).unwrap();
        assert!(report.is_clean());
        let report = one_sided_vanishing_report(&c3(), 2, 3).unwrap();
        assert!(report.is_clean());
    }

    fn conjugate(
        p: &GentlePresentation,
        f: &PrimeField,
        rep: &Representation,
        rng: &mut ChaCha8Rng,
    ) -> Representation {
        let quiver = p.quiver();
        let transforms: Vec<(FqMatrix, FqMatrix)> = rep
            .dims
            .iter()
            .map(|&d| loop {
                let mut m = FqMatrix::zero(d, d);
                for i in 0..d {
                    for j in 0..d {
                        m[(i, j)] = rng.random_range(0..f.q());
                    }
                }
                if let Some(inv) = m.inverse(f) {
                    return (m, inv);
                }
            })
            .collect();
        let mats = quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                transforms[a.target]
                    .0
                    .mul(f, &rep.mats[ai])
                    .mul(f, &transforms[a.source].1)
            })
            .collect();
        Representation {
            q: rep.q,
            dims: rep.dims.clone(),
            mats,
        }
    }

    #[test]
    fn hall_numbers_are_realization_independent() {
        let p = a2();
        let ctx = HallContext::new(&p, 3, 8).unwrap();
        let l = ctx
            .iso_class(&[word(&p, "a"), StringWord::trivial(1)])
            .unwrap();
        let p1 = ctx.iso_class(&[word(&p, "a")]).unwrap();
        let s2 = ctx.iso_class(&[StringWord::trivial(1)]).unwrap();
        let baseline = ctx.hall_number(&l, &p1, &s2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..3 {
            let twisted = conjugate(&p, &ctx.field, &ctx.realization(&l), &mut rng);
            twisted.verify(&p, &ctx.field).unwrap();
            // count submodules of the twisted realization directly
            let mut count = 0;
            for sub in enumerate_submodules(&p, &ctx.field, &twisted, 8).unwrap() {
                let u = sub_to_rep(&p, &ctx.field, &twisted, &sub);
                if ctx.decompose(&u).unwrap() != s2 {
                    continue;
                }
                let quot = quotient(&p, &ctx.field, &twisted, &sub);
                if ctx.decompose(&quot).unwrap() == p1 {
                    count += 1;
                }
            }
            assert_eq!(count, baseline);
        }
    }

    #[test]
    fn band_algebras_are_rejected() {
        let kron =
            GentlePresentation::parse("vertex 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n").unwrap();
        assert!(matches!(
            HallContext::new(&kron, 2, 8),
            Err(Error::NotRepresentationFinite(_))
        ));
    }
}
