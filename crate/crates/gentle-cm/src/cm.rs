//! Critical cycles, Gorenstein-projective labels, and the Cohen-Macaulay
//! Auslander presentation of a gentle algebra.
//!
//! A critical cycle is a repetition-free cyclic path `α₁…α_n` whose every
//! consecutive composite `α_iα_{i+1}` (cyclically) is a relation. The
//! Auslander presentation splits each arrow on such a cycle into a pair
//! `α⁺: s(α) → [α]`, `α⁻: [α] → t(α)` and carries the relations over as
//! `β⁺α⁻` for every original relation `βα` between cyclic arrows.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::quiver::{GentlePresentation, Quiver};

/// A critical cycle, stored in word order (last traversed first) and
/// rotated so the id sequence is lexicographically least. A cycle and its
/// reverse orientation are distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CriticalCycle {
    arrows: Vec<usize>,
}

impl CriticalCycle {
    fn canonical(mut word: Vec<usize>, q: &Quiver) -> Self {
        let n = word.len();
        let mut best = word.clone();
        for _ in 1..n {
            word.rotate_left(1);
            let key =
                |w: &[usize]| -> Vec<&str> { w.iter().map(|&a| q.arrow(a).id.as_str()).collect() };
            if key(&word) < key(&best) {
                best = word.clone();
            }
        }
        CriticalCycle { arrows: best }
    }

    /// Arrow indices in word order.
    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn display(&self, q: &Quiver) -> String {
        self.arrows
            .iter()
            .map(|&a| q.arrow(a).id.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// All critical cycles, each in canonical rotation, ordered by their
/// least arrow id. No arrow lies on two cycles; this is asserted.
pub fn critical_cycles(p: &GentlePresentation) -> Vec<CriticalCycle> {
    let q = p.quiver();
    let n = q.arrow_count();
    // chronological successor in the relation graph: x -> y iff yx ∈ I
    let mut succ: Vec<Option<usize>> = vec![None; n];
    for &(first, second) in p.relations() {
        // gentle inputs have at most one relation per first factor; keep
        // the smallest to stay deterministic on malformed input
        match succ[first] {
            None => succ[first] = Some(second),
            Some(old) if second < old => succ[first] = Some(second),
            _ => {}
        }
    }
    let mut on_cycle = vec![false; n];
    let mut cycles = Vec::new();
    let mut visited = vec![false; n];
    for start in 0..n {
        if visited[start] {
            continue;
        }
        // walk the functional graph until it leaves the unvisited region
        let mut trail = Vec::new();
        let mut pos = std::collections::HashMap::new();
        let mut cur = start;
        loop {
            if visited[cur] {
                break;
            }
            if let Some(&i) = pos.get(&cur) {
                // chronological cycle trail[i..]; word order is its reverse
                let chron: Vec<usize> = trail[i..].to_vec();
                for &a in &chron {
                    assert!(!on_cycle[a], "arrow on two critical cycles");
                    on_cycle[a] = true;
                }
                let word: Vec<usize> = chron.into_iter().rev().collect();
                cycles.push(CriticalCycle::canonical(word, q));
                break;
            }
            pos.insert(cur, trail.len());
            trail.push(cur);
            match succ[cur] {
                Some(next) => cur = next,
                None => break,
            }
        }
        for a in trail {
            visited[a] = true;
        }
    }
    cycles.sort_by(|x, y| {
        let key = |c: &CriticalCycle| -> Vec<String> {
            c.arrows.iter().map(|&a| q.arrow(a).id.clone()).collect()
        };
        key(x).cmp(&key(y))
    });
    cycles
}

/// The arrows lying on some critical cycle.
pub fn cyclic_arrows(p: &GentlePresentation) -> HashSet<usize> {
    critical_cycles(p)
        .iter()
        .flat_map(|c| c.arrows().iter().copied())
        .collect()
}

/// Labels of the indecomposable Gorenstein-projective modules: one
/// projective per vertex plus one radical label per cyclic arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GorensteinProjectives {
    pub projectives: Vec<String>,
    pub radicals: Vec<String>,
}

impl GorensteinProjectives {
    pub fn count(&self) -> usize {
        self.projectives.len() + self.radicals.len()
    }
}

pub fn gorenstein_projectives(p: &GentlePresentation) -> GorensteinProjectives {
    let q = p.quiver();
    let projectives = q.vertices().iter().map(|v| format!("P({v})")).collect();
    let cyc = cyclic_arrows(p);
    let radicals = q
        .arrows()
        .iter()
        .enumerate()
        .filter(|(i, _)| cyc.contains(i))
        .map(|(_, a)| format!("R({})", a.id))
        .collect();
    GorensteinProjectives {
        projectives,
        radicals,
    }
}

/// Multiset of critical cycle lengths, sorted ascending. Empty means the
/// singularity category is trivial.
pub fn singularity_profile(p: &GentlePresentation) -> Vec<usize> {
    let mut lengths: Vec<usize> = critical_cycles(p).iter().map(|c| c.len()).collect();
    lengths.sort_unstable();
    lengths
}

/// The Cohen-Macaulay Auslander presentation. New vertices are named
/// `[α]`, new arrows `α+` and `α-`; collisions with user ids are rejected.
/// With no critical cycles the input is returned unchanged.
pub fn cm_auslander(p: &GentlePresentation) -> Result<GentlePresentation> {
    let q = p.quiver();
    let cyc = cyclic_arrows(p);
    if cyc.is_empty() {
        return Ok(p.clone());
    }

    let mut vertices: Vec<String> = q.vertices().to_vec();
    let mut taken: HashSet<String> = vertices.iter().cloned().collect();
    for a in q.arrows() {
        taken.insert(a.id.clone());
    }
    let mut arrow_vertex = vec![String::new(); q.arrow_count()];
    for (i, a) in q.arrows().iter().enumerate() {
        if cyc.contains(&i) {
            let name = format!("[{}]", a.id);
            if !taken.insert(name.clone()) {
                return Err(Error::IdCollision(name));
            }
            arrow_vertex[i] = name.clone();
            vertices.push(name);
        }
    }

    let mut arrows: Vec<(String, String, String)> = Vec::new();
    for (i, a) in q.arrows().iter().enumerate() {
        if !cyc.contains(&i) {
            arrows.push((
                a.id.clone(),
                q.vertex_id(a.source).to_string(),
                q.vertex_id(a.target).to_string(),
            ));
        }
    }
    for (i, a) in q.arrows().iter().enumerate() {
        if cyc.contains(&i) {
            let plus = format!("{}+", a.id);
            let minus = format!("{}-", a.id);
            for id in [&plus, &minus] {
                if !taken.insert(id.clone()) {
                    return Err(Error::IdCollision(id.clone()));
                }
            }
            arrows.push((
                plus,
                q.vertex_id(a.source).to_string(),
                arrow_vertex[i].clone(),
            ));
            arrows.push((
                minus,
                arrow_vertex[i].clone(),
                q.vertex_id(a.target).to_string(),
            ));
        }
    }

    let mut relations: Vec<(String, String)> = Vec::new();
    for &(first, second) in p.relations() {
        let (alpha, beta) = (first, second);
        match (cyc.contains(&alpha), cyc.contains(&beta)) {
            (true, true) => relations.push((
                format!("{}+", q.arrow(beta).id),
                format!("{}-", q.arrow(alpha).id),
            )),
            (false, false) => relations.push((q.arrow(beta).id.clone(), q.arrow(alpha).id.clone())),
            _ => {
                // impossible for gentle input; guard instead of dropping
                return Err(Error::MixedRelation {
                    beta: q.arrow(beta).id.clone(),
                    alpha: q.arrow(alpha).id.clone(),
                });
            }
        }
    }

    let quiver = Quiver::new(vertices, arrows)?;
    GentlePresentation::new(quiver, relations)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> GentlePresentation {
        GentlePresentation::parse(
            "vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 1\nrel b a\nrel c b\nrel a c\n",
        )
        .unwrap()
    }

    fn a2() -> GentlePresentation {
        GentlePresentation::parse("vertex 1 2\narrow a: 1 -> 2\n").unwrap()
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
    fn cycles_of_the_standard_examples() {
        let cycles = critical_cycles(&c3());
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 3);
        assert!(critical_cycles(&a2()).is_empty());
        let cycles = critical_cycles(&loop_algebra());
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 1);
        let cycles = critical_cycles(&twocyc());
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 2);
    }

    #[test]
    fn gorenstein_projective_counts() {
        let g = gorenstein_projectives(&c3());
        assert_eq!(g.count(), 6);
        assert_eq!(g.projectives, vec!["P(1)", "P(2)", "P(3)"]);
        assert_eq!(g.radicals, vec!["R(a)", "R(b)", "R(c)"]);
        assert_eq!(gorenstein_projectives(&a2()).count(), 2);
        assert_eq!(gorenstein_projectives(&twocyc()).count(), 4);
    }

    #[test]
    fn singularity_profiles() {
        assert_eq!(singularity_profile(&c3()), vec![3]);
        assert_eq!(singularity_profile(&a2()), Vec::<usize>::new());
        assert_eq!(singularity_profile(&loop_algebra()), vec![1]);
    }

    #[test]
    fn hexagon_from_c3() {
        let hex = cm_auslander(&c3()).unwrap();
        assert_eq!(
            hex.quiver().vertices(),
            &["1", "2", "3", "[a]", "[b]", "[c]"]
        );
        let arrow_pairs: Vec<(String, String, String)> = hex
            .quiver()
            .arrows()
            .iter()
            .map(|a| {
                (
                    a.id.clone(),
                    hex.quiver().vertex_id(a.source).to_string(),
                    hex.quiver().vertex_id(a.target).to_string(),
                )
            })
            .collect();
        let expect = |id: &str, s: &str, t: &str| {
            assert!(
                arrow_pairs.contains(&(id.to_string(), s.to_string(), t.to_string())),
                "missing arrow {id}: {s} -> {t}"
            );
        };
        expect("a+", "1", "[a]");
        expect("a-", "[a]", "2");
        expect("b+", "2", "[b]");
        expect("b-", "[b]", "3");
        expect("c+", "3", "[c]");
        expect("c-", "[c]", "1");
        let mut rels = hex.relation_word_pairs();
        rels.sort();
        assert_eq!(
            rels,
            vec![
                ("a+".to_string(), "c-".to_string()),
                ("b+".to_string(), "a-".to_string()),
                ("c+".to_string(), "b-".to_string()),
            ]
        );
        assert!(hex.validate_gentle().is_ok());
        assert_eq!(hex.enumerate_nonzero_paths().unwrap().len(), 15);
        assert!(hex.is_schurian().unwrap());
        // the split halves compose: a- after a+ is a nonzero length-2 path
        let q = hex.quiver();
        let plus = crate::quiver::Path::Arrows(vec![q.arrow_idx("a+").unwrap()]);
        let minus = crate::quiver::Path::Arrows(vec![q.arrow_idx("a-").unwrap()]);
        match hex.compose(&minus, &plus).unwrap() {
            crate::quiver::Composite::Path(p) => assert_eq!(p.len(), 2),
            crate::quiver::Composite::Zero => panic!("a- a+ must be nonzero"),
        }
    }

    #[test]
    fn square_from_twocyc_and_loop_case() {
        let sq = cm_auslander(&twocyc()).unwrap();
        assert_eq!(sq.quiver().vertex_count(), 4);
        let mut rels = sq.relation_word_pairs();
        rels.sort();
        assert_eq!(
            rels,
            vec![
                ("a+".to_string(), "b-".to_string()),
                ("b+".to_string(), "a-".to_string()),
            ]
        );
        let two = cm_auslander(&loop_algebra()).unwrap();
        assert_eq!(two.quiver().vertices(), &["1", "[a]"]);
        assert_eq!(
            two.relation_word_pairs(),
            vec![("a+".to_string(), "a-".to_string())]
        );
        assert!(two.validate_gentle().is_ok());
    }

    #[test]
    fn no_cycles_means_identity() {
        let p = a2();
        assert_eq!(cm_auslander(&p).unwrap(), p);
    }

    #[test]
    fn vertex_and_arrow_counts() {
        for p in [c3(), a2(), loop_algebra(), twocyc()] {
            let cyc = cyclic_arrows(&p).len();
            let aus = cm_auslander(&p).unwrap();
            assert_eq!(aus.quiver().vertex_count(), p.quiver().vertex_count() + cyc);
            assert_eq!(aus.quiver().arrow_count(), p.quiver().arrow_count() + cyc);
            assert!(aus.validate_gentle().is_ok());
            // the construction is a fixed point: no new critical cycles
            assert!(critical_cycles(&aus).is_empty());
            assert_eq!(cm_auslander(&aus).unwrap(), aus);
        }
    }

    #[test]
    fn id_collision_rejected() {
        let p = GentlePresentation::parse("vertex 1 [a]\narrow a: 1 -> 1\nrel a a\n");
        // the vertex id `[a]` collides with the generated name
        let p = p.unwrap();
        assert!(matches!(cm_auslander(&p), Err(Error::IdCollision(_))));
    }
}
