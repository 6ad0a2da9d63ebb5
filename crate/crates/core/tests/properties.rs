use std::collections::BTreeSet;

use num_complex::Complex64;
use proptest::prelude::*;

use lxmix::circuit::{cx_count, plan_circuit, term_circuit};
use lxmix::compose::{box_product, multi_k_hot_plan, tensor_plans, EdgeGraph, ProductSpec};
use lxmix::format::{plan_from_json, plan_to_json};
use lxmix::restrict::{build_a, kernel_restrict, split_states, term_cost, unrestricted};
use lxmix::simqaoa::dense::{evolve_dense, exp_minus_i, pauli_matrix, pauli_matrix_kron, sum_matrix, DenseMatrix};
use lxmix::simqaoa::validate::{feasible_block, feasible_block_exact};
use lxmix::simqaoa::{check_preserves, check_transitions, evolve, evolve_via_circuit, StateVector};
use lxmix::stabilizer::{extend_by_error, group_elements, stabilizer_of_state};
use lxmix::subspace::find_group_orbits;
use lxmix::trotter::{make_candidates, select_optimal, synthesize, SynthOptions};
use lxmix::{
    best_restriction, build_family, chain_mixer, cost, expand_projector, minimal_generators, Dyadic, FeasibleSet,
    MixerPlan, PauliString, PauliSum, Selection,
};

fn pauli(max_n: usize) -> impl Strategy<Value = PauliString> {
    (1..=max_n).prop_flat_map(|n| {
        let m = (1u64 << n) - 1;
        (Just(n), 0..=m, 0..=m, 0u8..4).prop_map(|(n, x, z, k)| PauliString::new(n, x, z, k).unwrap())
    })
}

fn paulis_on(n: usize, count: usize) -> impl Strategy<Value = Vec<PauliString>> {
    let m = (1u64 << n) - 1;
    prop::collection::vec((0..=m, 0..=m, 0u8..4), count)
        .prop_map(move |v| v.into_iter().map(|(x, z, k)| PauliString::new(n, x, z, k).unwrap()).collect())
}

fn hermitian_on(n: usize) -> impl Strategy<Value = PauliString> {
    let m = (1u64 << n) - 1;
    (0..=m, 0..=m, prop::bool::ANY)
        .prop_map(move |(x, z, neg)| PauliString::new(n, x, z, if neg { 2 } else { 0 }).unwrap())
}

fn coefficient() -> impl Strategy<Value = Dyadic> {
    (-16i64..=16, 0u32..5).prop_filter_map("nonzero", |(a, e)| (a != 0).then(|| Dyadic::new(a, e)))
}

fn pauli_sum(n: usize) -> impl Strategy<Value = PauliSum> {
    prop::collection::vec((hermitian_on(n), coefficient()), 0..6).prop_map(move |t| PauliSum::from_terms(n, t).unwrap())
}

/// A feasible set on `n` qubits with `2..=max` states, in random order.
fn feasible(n: usize, max: usize) -> impl Strategy<Value = FeasibleSet> {
    let space = 1u64 << n;
    prop::collection::btree_set(0..space, 2..=max.min(space as usize))
        .prop_flat_map(|s| Just(s.into_iter().collect::<Vec<_>>()).prop_shuffle())
        .prop_map(move |v| FeasibleSet::new(n, v).unwrap())
}

fn any_feasible(max_n: usize, max: usize) -> impl Strategy<Value = FeasibleSet> {
    (2..=max_n).prop_flat_map(move |n| feasible(n, max))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn multiply_is_associative(v in (1usize..=6).prop_flat_map(|n| paulis_on(n, 3))) {
        let (p, q, r) = (v[0], v[1], v[2]);
        let left = p.multiply(&q).unwrap().multiply(&r).unwrap();
        let right = p.multiply(&q.multiply(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let id = PauliString::identity(p.n());
        prop_assert_eq!(p.multiply(&id).unwrap(), p);
        prop_assert_eq!(id.multiply(&p).unwrap(), p);
    }

    #[test]
    fn square_is_signed_identity(p in pauli(6)) {
        let sq = p.multiply(&p).unwrap();
        prop_assert!(sq.is_identity());
        prop_assert!(sq.sign().is_some());
        if p.is_hermitian() {
            prop_assert_eq!(sq.sign(), Some(1));
        }
    }

    #[test]
    fn commutes_matches_products(v in (1usize..=6).prop_flat_map(|n| paulis_on(n, 2))) {
        let (p, q) = (v[0], v[1]);
        let same = p.multiply(&q).unwrap() == q.multiply(&p).unwrap();
        prop_assert_eq!(p.commutes(&q).unwrap(), same);
    }

    #[test]
    fn product_matches_matrix_product(v in (1usize..=4).prop_flat_map(|n| paulis_on(n, 2))) {
        let (p, q) = (v[0], v[1]);
        let pq = pauli_matrix_kron(&p.multiply(&q).unwrap());
        prop_assert!(pauli_matrix_kron(&p).mul(&pauli_matrix_kron(&q)).max_abs_diff(&pq) < 1e-14);
    }

    #[test]
    fn bitmask_matrix_matches_letters(p in pauli(6)) {
        prop_assert!(pauli_matrix(&p).max_abs_diff(&pauli_matrix_kron(&p)) == 0.0);
    }

    #[test]
    fn text_round_trip(p in pauli(8)) {
        let back: PauliString = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn add_then_sub_restores(h in pauli_sum(4), t in pauli_sum(4)) {
        prop_assert_eq!(h.add(&t).unwrap().sub(&t).unwrap(), h);
    }

    #[test]
    fn cost_ignores_order_and_scale(
        terms in prop::collection::vec((hermitian_on(5), coefficient()), 0..8),
        k in coefficient(),
    ) {
        let h = PauliSum::from_terms(5, terms.clone()).unwrap();
        let rev = PauliSum::from_terms(5, terms.into_iter().rev()).unwrap();
        prop_assert_eq!(cost(&h), cost(&rev));
        prop_assert_eq!(cost(&h.scale(k)), cost(&h));
    }

    #[test]
    fn dyadic_round_trip(a in -1000i64..1000, e in 0u32..20) {
        let d = Dyadic::new(a, e);
        prop_assert_eq!(d.to_string().parse::<Dyadic>().unwrap(), d);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn family_partitions_pairs(b in any_feasible(6, 14)) {
        let family = build_family(&b).unwrap();
        let j = b.len();
        prop_assert_eq!(family.edge_count(), j * (j - 1) / 2);
        for (lx, g) in family.iter() {
            let x = PauliString::x_type(b.n(), lx).unwrap();
            for &(u, v) in &g.edges {
                prop_assert_eq!(x.apply_x_type(u).unwrap(), v);
            }
        }
    }

    #[test]
    fn orbits_are_closed_and_cover(b in any_feasible(6, 14)) {
        let family = build_family(&b).unwrap();
        for (lx, g) in family.iter() {
            let orbits = find_group_orbits(lx, g);
            prop_assert_eq!(orbits.iter().map(|o| o.states.len()).sum::<usize>(), g.vertices.len());
            for o in &orbits {
                let gens = o.all_generators();
                for k in 0u64..1 << gens.len() {
                    let w = (0..gens.len()).filter(|j| k >> j & 1 == 1).fold(0, |acc, j| acc ^ gens[j]);
                    prop_assert!(o.states.binary_search(&(o.base ^ w)).is_ok());
                }
            }
        }
    }

    #[test]
    fn projector_of_orbit(b in any_feasible(5, 12)) {
        let n = b.n();
        let family = build_family(&b).unwrap();
        for (lx, g) in family.iter() {
            for o in find_group_orbits(lx, g) {
                let gs = minimal_generators(n, o.base, &o.all_generators()).unwrap();
                let p = sum_matrix(&expand_projector(&gs).unwrap()).unwrap();
                prop_assert!(p.mul(&p).max_abs_diff(&p) < 1e-14);
                let trace: f64 = (0..p.dim).map(|i| p.get(i, i).re).sum();
                prop_assert!((trace - (1u64 << (n - gs.len())) as f64).abs() < 1e-12);
                for z in 0..1u64 << n {
                    let want = if o.states.contains(&z) { 1.0 } else { 0.0 };
                    let col: Vec<Complex64> = (0..p.dim).map(|r| p.get(r, z as usize)).collect();
                    prop_assert!((col[z as usize].re - want).abs() < 1e-14);
                    prop_assert!(col.iter().enumerate().all(|(r, a)| r == z as usize || a.norm() < 1e-14));
                }
            }
        }
    }

    #[test]
    fn extension_halves_the_group(n in 2usize..=6, base in 0u64..64, e in 1u64..64) {
        let (base, e) = (base & ((1 << n) - 1), e & ((1 << n) - 1));
        prop_assume!(e != 0);
        let g = stabilizer_of_state(n, base).unwrap();
        let before = expand_projector(&g).unwrap().len();
        let ext = extend_by_error(&g, &PauliString::x_type(n, e).unwrap()).unwrap();
        prop_assert_eq!(expand_projector(&ext).unwrap().len() * 2, before);
        prop_assert!(ext.stabilizes(base) && ext.stabilizes(base ^ e));
    }

    #[test]
    fn generator_sets_agree_by_code_space(n in 2usize..=6, base in 0u64..64, errs in prop::collection::vec(1u64..64, 1..3)) {
        let mask = (1u64 << n) - 1;
        let base = base & mask;
        let errs: Vec<u64> = errs.into_iter().map(|e| e & mask).collect();
        prop_assume!(lxmix::linalg::gf2_rank(&errs) == errs.len());
        let g = minimal_generators(n, base, &errs).unwrap();
        let mut rev = errs.clone();
        rev.reverse();
        let h = minimal_generators(n, base, &rev).unwrap();
        let code: Vec<u64> = (0..=mask).filter(|&z| g.stabilizes(z)).collect();
        prop_assert_eq!(code.len(), 1 << errs.len());
        prop_assert!(code.iter().all(|&z| h.stabilizes(z)));
        prop_assert!(g.same_group(&h));
    }

    #[test]
    fn restriction_conditions_hold(b in any_feasible(5, 12)) {
        let n = b.n();
        let family = build_family(&b).unwrap();
        for (lx, g) in family.iter() {
            for o in find_group_orbits(lx, g) {
                let gs = minimal_generators(n, o.base, &o.all_generators()).unwrap();
                let r = best_restriction(lx, &gs, &b, &g.vertices).unwrap();
                prop_assert!(r.cost <= unrestricted(lx, &gs).unwrap().cost);
                for &z in b.states() {
                    let v = r.projector.diagonal_value(z).unwrap();
                    if o.states.contains(&z) {
                        prop_assert_eq!(v, Dyadic::ONE);
                    } else if !g.vertices.contains(&z) {
                        prop_assert_eq!(v, Dyadic::ZERO);
                    } else {
                        prop_assert!(v == Dyadic::ZERO || v == Dyadic::ONE);
                    }
                }
                let split = split_states(&gs, &b, &g.vertices);
                let elements = group_elements(&gs).unwrap();
                let a = build_a(&elements, &split.outside).unwrap();
                let costs: Vec<usize> = elements.iter().map(|s| term_cost(lx, s)).collect();
                let k = kernel_restrict(&a, &costs, &split.free).unwrap();
                let mut total = Dyadic::ZERO;
                for (p, w) in k.projector.terms() {
                    // Coefficients are stored on unsigned strings.
                    if elements.contains(&p) {
                        total += w;
                    } else {
                        prop_assert!(elements.contains(&p.negate()));
                        total += -w;
                    }
                }
                prop_assert!(!total.is_zero());
                for &z in &split.outside {
                    prop_assert_eq!(k.projector.diagonal_value(z).unwrap(), Dyadic::ZERO);
                }
            }
        }
    }

    #[test]
    fn subgroup_projectors_are_groups(b in any_feasible(5, 12)) {
        let n = b.n();
        let family = build_family(&b).unwrap();
        for (lx, g) in family.iter() {
            for o in find_group_orbits(lx, g) {
                let gs = minimal_generators(n, o.base, &o.all_generators()).unwrap();
                let r = best_restriction(lx, &gs, &b, &g.vertices).unwrap();
                if r.method != lxmix::Method::Subgroup {
                    continue;
                }
                let w = r.projector.coefficient(&PauliString::identity(n));
                prop_assert!(!w.is_zero());
                let elems: BTreeSet<PauliString> = r
                    .projector
                    .terms()
                    .map(|(p, c)| if c == w { p } else { p.negate() })
                    .collect();
                for a in &elems {
                    for c in &elems {
                        prop_assert!(elems.contains(&a.multiply(c).unwrap()));
                    }
                }
            }
        }
    }
}

fn block_adjacency(plan: &MixerPlan, b: &FeasibleSet) -> Result<(), TestCaseError> {
    for c in &plan.candidates {
        let exact = feasible_block_exact(&c.term, b).expect("real entries");
        for (i, &x) in b.states().iter().enumerate() {
            for (j, &y) in b.states().iter().enumerate() {
                let want =
                    if c.edges.contains(&lxmix::subspace::edge(x, y)) && x != y { Dyadic::ONE } else { Dyadic::ZERO };
                prop_assert_eq!(exact[i][j], want);
            }
        }
        let m = sum_matrix(&c.term).unwrap();
        prop_assert_eq!(m.adjoint(), m.clone());
        let dim = 1usize << b.n();
        for &y in b.states() {
            for x in (0..dim as u64).filter(|x| !b.contains(*x)) {
                prop_assert_eq!(m.get(x as usize, y as usize), Complex64::new(0.0, 0.0));
            }
        }
        let terms: Vec<PauliString> = c.term.terms().map(|(p, _)| p).collect();
        prop_assert!(terms.iter().all(|p| terms.iter().all(|q| p.commutes(q).unwrap())));
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn synthesized_plans_are_valid(b in any_feasible(5, 12)) {
        for restrict in [false, true] {
            let plan = synthesize(&b, SynthOptions { restrict, selection: Selection::Auto }).unwrap();
            block_adjacency(&plan, &b)?;
            prop_assert!(check_preserves(&plan, &b, 4, 1).unwrap() <= 1e-10);
            prop_assert!(check_transitions(&plan, &b, 2).unwrap());
            prop_assert_eq!(cx_count(&plan_circuit(&plan, 0.5).unwrap()), plan.total_cost);
        }
    }

    #[test]
    fn restriction_never_costs_more(b in any_feasible(5, 10)) {
        let sp = synthesize(&b, SynthOptions { restrict: false, selection: Selection::Exact }).unwrap();
        let sr = synthesize(&b, SynthOptions { restrict: true, selection: Selection::Exact }).unwrap();
        prop_assert!(sr.total_cost <= sp.total_cost);
    }

    #[test]
    fn exact_beats_chain_and_greedy(b in any_feasible(4, 8)) {
        for restrict in [false, true] {
            let cands = make_candidates(&b, restrict).unwrap();
            let exact = select_optimal(&cands, &b, Selection::Exact).unwrap();
            let greedy = select_optimal(&cands, &b, Selection::Greedy).unwrap();
            prop_assert!(exact.total_cost <= greedy.total_cost);
            prop_assert!(exact.total_cost <= chain_mixer(&b, restrict).unwrap().total_cost);
        }
    }

    #[test]
    fn evolution_paths_agree(b in any_feasible(4, 8), beta in -3.0f64..3.0) {
        let plan = synthesize(&b, SynthOptions::default()).unwrap();
        let psi = StateVector::uniform_over(&b).unwrap();
        let a = evolve(&plan, beta, &psi).unwrap();
        let c = evolve_via_circuit(&plan, beta, &psi).unwrap();
        let d = evolve_dense(&plan, beta, &psi).unwrap();
        // The circuit drops identity terms, a global phase per candidate.
        let phase = c.inner(&a);
        prop_assert!((phase.norm() - 1.0).abs() < 1e-9);
        let dist = |x: &StateVector, y: &StateVector, ph: Complex64| {
            x.amplitudes().iter().zip(y.amplitudes()).map(|(p, q)| (p - q * ph).norm()).fold(0.0, f64::max)
        };
        prop_assert!(dist(&a, &c, phase) < 1e-9);
        prop_assert!(dist(&a, &d, Complex64::new(1.0, 0.0)) < 1e-9);
        prop_assert!((a.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn plan_json_round_trip(b in any_feasible(5, 10), seed in proptest::option::of(0u64..1000)) {
        let plan = synthesize(&b, SynthOptions::default()).unwrap();
        let text = plan_to_json(&plan, seed);
        let (back, s) = plan_from_json(&text).unwrap();
        prop_assert_eq!(&back, &plan);
        prop_assert_eq!(s, seed);
        prop_assert_eq!(plan_to_json(&back, seed), text);
    }

    #[test]
    fn feasible_set_text_round_trip(b in any_feasible(8, 20)) {
        prop_assert_eq!(FeasibleSet::parse_text(&b.to_text()).unwrap(), b);
    }

    #[test]
    fn term_circuit_matches_exponential(p in (1usize..=5).prop_flat_map(hermitian_on), w in coefficient(), t in -2.0f64..2.0) {
        prop_assume!(!p.is_identity());
        let c = term_circuit(&p, w.to_f64(), t).unwrap();
        let dim = 1usize << p.n();
        let mut u = DenseMatrix::zeros(dim);
        for col in 0..dim {
            let mut psi = StateVector::basis(p.n(), col as u64).unwrap();
            psi.apply_circuit(&c).unwrap();
            for (row, a) in psi.amplitudes().iter().enumerate() {
                u.set(row, col, *a);
            }
        }
        let exact = exp_minus_i(&PauliSum::from_terms(p.n(), [(p, w)]).unwrap(), t).unwrap();
        prop_assert!(u.max_abs_diff(&exact) < 1e-10);
        let zero = term_circuit(&p, w.to_f64(), 0.0).unwrap();
        let mut id = DenseMatrix::zeros(dim);
        for col in 0..dim {
            let mut psi = StateVector::basis(p.n(), col as u64).unwrap();
            psi.apply_circuit(&zero).unwrap();
            for (row, a) in psi.amplitudes().iter().enumerate() {
                id.set(row, col, *a);
            }
        }
        prop_assert!(id.max_abs_diff(&DenseMatrix::identity(dim)) < 1e-12);
    }

    #[test]
    fn products_stay_valid(f in feasible(2, 3), g in feasible(3, 5)) {
        let spec = ProductSpec::new(vec![f.clone(), g.clone()]).unwrap();
        let pf = synthesize(&f, SynthOptions::default()).unwrap();
        let pg = synthesize(&g, SynthOptions::default()).unwrap();
        let plan = tensor_plans(&[pf.clone(), pg.clone()], &spec).unwrap();
        let b = spec.product_set().unwrap();
        prop_assert!(check_preserves(&plan, &b, 4, 3).unwrap() <= 1e-10);
        prop_assert!(check_transitions(&plan, &b, 4).unwrap());
        let boxed = box_product(&EdgeGraph::from_plan(&pf, &f), &EdgeGraph::from_plan(&pg, &g));
        prop_assert_eq!(boxed.edges.len(), f.len() * pg.union_edges().len() + g.len() * pf.union_edges().len());
        let mut edges = plan.union_edges();
        edges.sort_unstable();
        prop_assert_eq!(edges, boxed.edges);
    }
}

#[test]
fn band_mixers_preserve_and_connect() {
    for n in 2..=6 {
        for k1 in 0..=n {
            for k2 in k1..=n {
                let b = FeasibleSet::hamming_band(n, k1, k2).unwrap();
                if b.len() < 2 {
                    continue;
                }
                let plan = multi_k_hot_plan(n, k1, k2).unwrap();
                assert!(check_preserves(&plan, &b, 4, 9).unwrap() <= 1e-10, "band {n} {k1}..{k2}");
                assert!(check_transitions(&plan, &b, 9).unwrap(), "band {n} {k1}..{k2}");
            }
        }
    }
}

#[test]
fn zero_angle_plan_circuit_is_identity() {
    let b = FeasibleSet::from_strings(&["1010", "0111", "1110", "1001", "0010", "0000", "1101"]).unwrap();
    let plan = synthesize(&b, SynthOptions::default()).unwrap();
    let c = plan_circuit(&plan, 0.0).unwrap();
    let dim = 16;
    let mut u = DenseMatrix::zeros(dim);
    for col in 0..dim {
        let mut psi = StateVector::basis(4, col as u64).unwrap();
        psi.apply_circuit(&c).unwrap();
        for (row, a) in psi.amplitudes().iter().enumerate() {
            u.set(row, col, *a);
        }
    }
    assert!(u.max_abs_diff(&DenseMatrix::identity(dim)) < 1e-12);
}

#[test]
fn restricted_block_extends_unrestricted_block() {
    let b = FeasibleSet::from_strings(&["10010", "01010", "10011", "11101", "00110", "01110"]).unwrap();
    let family = build_family(&b).unwrap();
    for (lx, g) in family.iter() {
        for o in find_group_orbits(lx, g) {
            let gs = minimal_generators(5, o.base, &o.all_generators()).unwrap();
            let x = PauliString::x_type(5, lx).unwrap();
            let plain = feasible_block(&unrestricted(lx, &gs).unwrap().projector.left_multiply(&x).unwrap(), &b);
            let restricted = feasible_block(
                &best_restriction(lx, &gs, &b, &g.vertices).unwrap().projector.left_multiply(&x).unwrap(),
                &b,
            );
            for (pr, rr) in plain.iter().zip(&restricted) {
                for (p, r) in pr.iter().zip(rr) {
                    if p.norm() > 0.0 {
                        assert_eq!(p, r);
                    } else {
                        assert!(r.norm() == 0.0 || *r == Complex64::new(1.0, 0.0));
                    }
                }
            }
        }
    }
}
