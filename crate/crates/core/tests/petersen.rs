use palette_core::chromatic::chromatic_index;
use palette_core::graph::petersen;
use palette_core::Budget;

/// Perfect matchings of the Petersen graph as edge bitmasks, by brute force.
fn perfect_matchings() -> Vec<u32> {
    let g = petersen();
    let m = g.edge_count();
    (0u32..1 << m)
        .filter(|mask| mask.count_ones() == 5)
        .filter(|mask| {
            let mut seen = 0u32;
            (0..m).filter(|i| mask >> i & 1 == 1).all(|i| {
                let (u, v) = g.edges()[i];
                let bits = 1 << u | 1 << v;
                let ok = seen & bits == 0;
                seen |= bits;
                ok
            })
        })
        .collect()
}

#[test]
fn petersen_has_six_perfect_matchings_and_no_partition() {
    let ms = perfect_matchings();
    assert_eq!(ms.len(), 6);
    let all = (1u32 << 15) - 1;
    for a in &ms {
        for b in &ms {
            for c in &ms {
                assert_ne!(a | b | c, all, "3-edge-coloring found");
            }
        }
    }
}

#[test]
fn solver_agrees_petersen_is_class_two() {
    let ci = chromatic_index(&petersen(), &Budget::UNLIMITED).unwrap();
    assert!(ci.is_class_two());
    assert_eq!(ci.value(), Some(4));
}
