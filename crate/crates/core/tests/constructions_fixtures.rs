use johnson_cover::bounds::{k3_cover_size, recursive_upper_bound, theta_closed_form};
use johnson_cover::constructions::{
    code_from_cover_simple, code_from_cover_two_element, cover_from_blocks, find_conversion_element,
};
use johnson_cover::fixtures::{minimal_cover, minimal_cover_params, steiner_12_6_5, table_theta};
use johnson_cover::graph::{complement_cover, cover_stats};
use johnson_cover::io::{parse_cover, write_cover};
use johnson_cover::{
    cover_k1, cover_k2, cover_k3, cover_recursive, is_code, verify_cover, BlockRole, CliqueKind, Error, GraphParams,
    Subset,
};

#[test]
fn closed_form_families() {
    for n in 2..=20 {
        let c = cover_k1(n).unwrap();
        assert_eq!(c.len(), 1);
        assert!(verify_cover(&c).covered);
    }
    for n in 3..=50 {
        let c = cover_k2(n).unwrap();
        assert_eq!(c.len() as u32, n - 2, "n={n}");
        assert!(verify_cover(&c).covered);
    }
    for n in 4..=30 {
        let c = cover_k3(n).unwrap();
        assert_eq!(c.len() as u64, k3_cover_size(n as u64));
        assert!(verify_cover(&c).covered);
        assert!(c.cliques().iter().all(|c| c.kind() == CliqueKind::A));
    }
    assert!(cover_k3(3).is_err());
}

#[test]
fn closed_forms_match_the_table() {
    for n in 2..=15 {
        for k in 1..n {
            let p = GraphParams::new(n, k).unwrap();
            if let Some(v) = theta_closed_form(p) {
                assert!(table_theta(p).unwrap().contains(v), "J({n},{k})");
            }
        }
    }
}

#[test]
fn recursive_cover_sizes() {
    for n in 2..=14 {
        for k in 1..n {
            let p = GraphParams::new(n, k).unwrap();
            let c = cover_recursive(p).unwrap();
            assert_eq!(c.len() as u64, recursive_upper_bound(p), "J({n},{k})");
            assert!(verify_cover(&c).covered, "J({n},{k})");
        }
    }
}

#[test]
fn fixtures_roundtrip_and_verify() {
    let sizes = [((8, 4), 14), ((9, 4), 25), ((10, 4), 40), ((10, 5), 46), ((11, 4), 56), ((12, 6), 132)];
    let params: Vec<_> = minimal_cover_params().collect();
    assert_eq!(params, sizes.iter().map(|s| s.0).collect::<Vec<_>>());
    for ((n, k), size) in sizes {
        let cover = minimal_cover(n, k).unwrap();
        assert_eq!(cover.len(), size);
        assert!(verify_cover(&cover).covered);
        let again = parse_cover(&write_cover(&cover, None)).unwrap().cover;
        assert_eq!(again, cover);
        let mirrored = complement_cover(&cover);
        assert!(verify_cover(&mirrored).covered);
        assert_eq!(table_theta(GraphParams::new(n, n - k).unwrap()).unwrap().hi as usize, size);
    }
}

#[test]
fn eight_four_converts_to_a_code() {
    let cover = minimal_cover(8, 4).unwrap();
    assert_eq!(find_conversion_element(&cover), Some(6));
    let code = code_from_cover_simple(&cover, 6).unwrap();
    assert_eq!(code.len(), 14);
    assert!(is_code(cover.params(), code.words()));
    for j in [1, 2, 3, 4, 5, 7, 8] {
        assert!(code_from_cover_simple(&cover, j).is_err(), "j={j}");
    }
}

#[test]
fn twelve_six_needs_two_elements() {
    let cover = minimal_cover(12, 6).unwrap();
    assert_eq!(find_conversion_element(&cover), None);
    // in this cover the two special elements are 10 and 11
    let conv = code_from_cover_two_element(&cover, 11, 10).unwrap();
    assert!(conv.is_code);
    let code = conv.into_code(cover.params()).unwrap();
    assert_eq!(code.len(), 132);
    assert!(code_from_cover_two_element(&cover, 10, 11).unwrap().is_code);
    assert!(code_from_cover_two_element(&cover, 10, 9).is_err());
    let stats = cover_stats(&cover);
    assert_eq!((stats.n_a, stats.n_b), (66, 66));
    for j in 1..=12 {
        let want = if j == 10 || j == 11 { 15 } else { 30 };
        assert_eq!(stats.a_count(j), want, "a[{j}]");
    }
    assert!(code_from_cover_two_element(&cover, 3, 3).is_err());
}

#[test]
fn steiner_system_gives_a_type_b_cover() {
    let design = steiner_12_6_5();
    assert_eq!((design.v, design.s), (12, 6));
    let p = GraphParams::new(12, 5).unwrap();
    let cover = cover_from_blocks(p, &design.blocks, BlockRole::CoveringDesign).unwrap();
    assert_eq!(cover.len(), 132);
    let report = verify_cover(&cover);
    assert!(report.covered && report.disjoint());
    assert!(cover.cliques().iter().all(|c| c.kind() == CliqueKind::B));

    // the complementary blocks form a Turán system for J(12, 7)
    let turan: Vec<Subset> = design.blocks.iter().map(|b| b.complement(12)).collect();
    let q = GraphParams::new(12, 7).unwrap();
    assert_eq!(cover_from_blocks(q, &turan, BlockRole::TuranSystem).unwrap().len(), 132);

    let mut broken = design.blocks.clone();
    broken.pop();
    match cover_from_blocks(p, &broken, BlockRole::CoveringDesign) {
        Err(Error::InvalidBlocks { witness, .. }) => assert_eq!(witness.len(), 5),
        other => panic!("expected a witness, got {other:?}"),
    }
}
