use gentle_cm::cluster::{fz_mutate, is_good_mutation, random_cluster_quiver, ClusterQuiver};
use gentle_cm::cm::{cm_auslander, critical_cycles};
use gentle_cm::generate::random_gentle_presentation;
use gentle_cm::strings::{dim_vector_uniqueness, find_band, has_loop};

#[test]
fn probe_transfer_corpus_composition() {
    let mut with_cycles = 0;
    let mut with_loops = 0;
    let mut schurian = 0;
    let mut loop_free_unique = 0;
    let mut aus_bigger = 0;
    for seed in 0..220u64 {
        let p = random_gentle_presentation(8, seed);
        if !critical_cycles(&p).is_empty() {
            with_cycles += 1;
        }
        if has_loop(p.quiver()) {
            with_loops += 1;
        }
        if p.is_schurian().unwrap_or(false) {
            schurian += 1;
        }
        let aus = cm_auslander(&p).unwrap();
        if aus.quiver().vertex_count() > p.quiver().vertex_count() {
            aus_bigger += 1;
        }
        if !has_loop(p.quiver()) && find_band(&p).is_none() && dim_vector_uniqueness(&p).unwrap() {
            loop_free_unique += 1;
        }
    }
    println!("critical cycles: {with_cycles}/220");
    println!("loops: {with_loops}/220");
    println!("schurian: {schurian}/220");
    println!("loop-free with unique dim vectors: {loop_free_unique}/220");
    println!("construction strictly bigger: {aus_bigger}/220");
    assert!(
        with_cycles >= 30,
        "too few presentations with critical cycles"
    );
    assert!(with_loops >= 5, "too few loops");
    assert!(schurian >= 20, "too few schurian presentations");
    assert!(
        loop_free_unique >= 20,
        "uniqueness premise rarely satisfied"
    );
}

#[test]
fn probe_mutation_corpus_composition() {
    let mut good = 0;
    let mut bad = 0;
    for i in 0..12u64 {
        let t = (i % 4) as usize;
        let s = (i % 3) as usize + 1;
        let q = random_cluster_quiver(t, s, 900 + i);
        if q.quiver().vertex_count() > 8 {
            continue;
        }
        for v in q.quiver().vertices().to_vec() {
            if is_good_mutation(&q, &v).unwrap() {
                good += 1;
            } else {
                bad += 1;
            }
            let _ = ClusterQuiver::new(fz_mutate(q.quiver(), &v).unwrap()).unwrap();
        }
    }
    println!("good mutations: {good}, bad mutations: {bad}");
    assert!(good >= 10);
    assert!(
        bad >= 5,
        "need bad mutations in the corpus to test the triangle-count shift"
    );
}
