use lpa_core::corpus;
use lpa_core::lattice::{closed_form_meet, enumerate_hs};
use lpa_core::oracles::{acyclic_sink_lattice, brute_hs};
use lpa_core::theorems::{registry, Analysis};
use lpa_core::FieldTag;

fn analyses() -> Vec<(String, Analysis)> {
    corpus::corpus(200)
        .into_iter()
        .map(|(name, g)| {
            let a = Analysis::new(g, FieldTag::Rationals).unwrap_or_else(|e| panic!("{name}: {e}"));
            (name, a)
        })
        .collect()
}

#[test]
fn every_registered_check_passes_on_the_corpus() {
    for (name, a) in analyses() {
        for check in registry() {
            let out = check.run(&a).unwrap_or_else(|e| panic!("{name} {}: {e}", check.name()));
            assert!(out.passed, "{name}: {} {}", check.name(), out.details);
        }
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for (name, g) in corpus::corpus(200) {
        assert_eq!(enumerate_hs(&g), brute_hs(&g).unwrap(), "{name}");
    }
    for seed in 0..100 {
        let g = corpus::random_graph(10_000 + seed, 12);
        assert_eq!(enumerate_hs(&g), brute_hs(&g).unwrap(), "seed {seed}");
    }
}

#[test]
fn closed_form_meet_matches_search() {
    for (name, a) in analyses() {
        let l = &a.lattice;
        for i in 0..l.len() {
            for j in 0..l.len() {
                assert_eq!(closed_form_meet(&a.graph, &l.get(i), &l.get(j)), l.get(l.meet(i, j)), "{name}");
            }
        }
    }
}

#[test]
fn sink_powerset_on_random_dags() {
    for seed in 0..100 {
        let g = corpus::random_dag(seed, 10);
        let r = acyclic_sink_lattice(&g).unwrap();
        assert!(r.holds, "seed {seed}: {:?}", r.failures);
    }
}

#[test]
fn data_files_match_named_graphs() {
    let root = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    for (name, g) in corpus::named() {
        let text = std::fs::read_to_string(root.join(format!("{name}.json"))).unwrap();
        let (loaded, field) = lpa_core::io::load_graph(&text, None).unwrap();
        assert_eq!(field, FieldTag::Rationals);
        assert_eq!(loaded, g, "{name}");
    }
}
