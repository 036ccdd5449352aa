use signed_graphs::bounds::binomial;
use signed_graphs::coloring::balanced_chromatic_number;
use signed_graphs::kneser::{
    kneser_girth_formula, kneser_signed, lower_bound_witness, schrijver_signed,
    shift_cycle_witness, GirthValue,
};
use signed_graphs::{Budget, EdgeState};

#[test]
fn girth_formula_holds_up_to_seven() {
    for n in 1..=7 {
        for k in 1..=n {
            let ks = kneser_signed(n, k).unwrap();
            let measured = GirthValue::of(ks.graph.negative_girth().length());
            assert_eq!(measured, kneser_girth_formula(n, k).unwrap(), "KS({n},{k})");
            let ss = schrijver_signed(n, k).unwrap();
            let s = GirthValue::of(ss.graph.negative_girth().length());
            let at_least = match (s, measured) {
                (GirthValue::Infinite, _) => true,
                (GirthValue::Finite(_), GirthValue::Infinite) => false,
                (GirthValue::Finite(a), GirthValue::Finite(b)) => a >= b,
            };
            assert!(at_least, "SS({n},{k})");
        }
    }
}

#[test]
fn remark_values() {
    assert_eq!(
        kneser_signed(6, 4).unwrap().graph.negative_girth().length(),
        Some(3)
    );
    // the remark gives 4 here; a negative triangle of alternating sets exists
    let ss = schrijver_signed(6, 4).unwrap();
    let c = ss.graph.negative_girth();
    let tri: Vec<String> = c
        .witness()
        .unwrap()
        .vertices
        .iter()
        .map(|&v| ss.subsets[v].to_string())
        .collect();
    assert_eq!(tri, ["1,-2,3,-4", "1,-4,5,-6", "2,-3,5,-6"]);
}

#[test]
fn shift_witnesses_validate() {
    for n in 2..=9 {
        for k in (n / 2 + 1)..n {
            if 2 * k <= n {
                continue;
            }
            let w = shift_cycle_witness(n, k).unwrap();
            let host = kneser_signed(n, k).unwrap();
            let cycle = w.locate(&host).unwrap();
            cycle.validate(&host.graph).unwrap();
            assert_eq!(
                GirthValue::Finite(cycle.len()),
                kneser_girth_formula(n, k).unwrap()
            );
        }
    }
}

#[test]
fn reduced_schrijver_chromatic_law() {
    for n in 1..=15u32 {
        for k in 1..=n {
            if binomial(n as u64, k as u64).unwrap() > 15 {
                continue;
            }
            let g = schrijver_signed(n, k).unwrap().reduce().unwrap().graph;
            let r = balanced_chromatic_number(&g, Budget::default());
            assert_eq!(r.value(), Some((n - k + 1) as usize), "SS({n},{k})");
        }
    }
}

#[test]
fn reduced_kneser_chromatic_law() {
    for n in 1..=6u32 {
        for k in 1..=n {
            let size = binomial(n as u64, k as u64).unwrap() << k;
            if size / 2 > 12 {
                continue;
            }
            let g = kneser_signed(n, k).unwrap().reduce().unwrap().graph;
            assert_eq!(
                balanced_chromatic_number(&g, Budget::default()).value(),
                Some((n - k + 1) as usize)
            );
        }
    }
}

#[test]
fn swapping_in_an_antitwin_is_a_switching() {
    let ks = kneser_signed(5, 3).unwrap();
    let reduced = ks.reduce().unwrap();
    for x in 0..reduced.subsets.len() {
        let mut swapped = reduced.subsets.clone();
        swapped[x] = swapped[x].negated();
        let keep: Vec<usize> = swapped.iter().map(|s| ks.index_of(s).unwrap()).collect();
        let other = ks.restrict(&keep);
        let at: Vec<usize> = swapped.iter().map(|s| other.index_of(s).unwrap()).collect();
        let switched = reduced.graph.switch(&[x]).unwrap();
        for i in 0..at.len() {
            for j in i + 1..at.len() {
                assert_eq!(
                    other.graph.edge_state(at[i], at[j]),
                    switched.edge_state(i, j)
                );
            }
        }
    }
}

#[test]
fn digons_when_n_at_least_2k() {
    for (n, k) in [(2, 1), (4, 2), (6, 3), (7, 3)] {
        let g = kneser_signed(n, k).unwrap().graph;
        let has_digon = (0..g.n()).any(|u| {
            g.neighbor_vertices(u)
                .any(|v| g.edge_state(u, v) == EdgeState::Digon)
        });
        assert!(has_digon);
    }
}

#[test]
fn deleting_a_vertex_can_drop_chi_b() {
    let g = schrijver_signed(5, 3).unwrap().reduce().unwrap().graph;
    assert_eq!(
        balanced_chromatic_number(&g, Budget::default()).value(),
        Some(3)
    );
    let rest: Vec<usize> = (1..g.n()).collect();
    let h = g.induced(&rest).unwrap();
    assert_eq!(
        balanced_chromatic_number(&h, Budget::default()).value(),
        Some(2)
    );
}

#[test]
fn lower_bound_sweep() {
    for p in [2u32, 3] {
        for n in (p as usize..=40).step_by(2) {
            let w = lower_bound_witness(p, n).unwrap();
            assert_eq!(w.graph.n(), n);
            let girth = w.graph.negative_girth().length().unwrap();
            assert!(girth >= w.predicted_girth, "p = {p}, n = {n}");
            assert!(girth as u64 >= signed_graphs::bounds::lower_bound_ceiling(n as u64, p));
        }
    }
}
