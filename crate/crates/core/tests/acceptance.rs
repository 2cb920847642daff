//! End-to-end acceptance suite. Each test covers one numbered claim about
//! the library, prints a `[PASS]` line when it holds, and fails loudly
//! otherwise. Run with `cargo test --test acceptance -- --nocapture` to see
//! the per-criterion lines.

mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use coxshell::complex::{
    all_extensions_shelling, all_k_subsets, decide_linear_shellability, find_shelling_order,
    gale_leq, is_shelling, is_strong_shelling, random_pure_complex, shelling_violation, tail_swap,
    Facet, FacetSequence, IntPolynomial, PureComplex, ShellMode,
};
use coxshell::coxcomplex::{facet_of, CoxComplex, CoxVertex, ThinClass};
use coxshell::coxeter::{CoxeterSystem, GroupElement};
use coxshell::interval::{check_cover_criterion, check_reflection_formula, enumerate_interval};

use common::{load_data_complex, subword_products};

fn elem(sys: &Arc<CoxeterSystem>, word: &[usize]) -> GroupElement {
    GroupElement::from_word(sys, word).unwrap()
}

fn group(sys: &Arc<CoxeterSystem>) -> Vec<GroupElement> {
    GroupElement::all_elements(sys, 10_000).unwrap()
}

fn reflections(sys: &Arc<CoxeterSystem>, words: &[&[usize]]) -> BTreeSet<GroupElement> {
    words.iter().map(|w| elem(sys, w)).collect()
}

/// The permutation 6457312 and its inverse, as vertex relabelings.
const SIGMA: [u32; 7] = [6, 4, 5, 7, 3, 1, 2];
const SIGMA_INV: [u32; 7] = [6, 7, 5, 2, 3, 1, 4];

#[test]
fn criterion_01_a3_reference_interval() {
    let sys = CoxeterSystem::from_shorthand("A3").unwrap();
    let u = elem(&sys, &[0, 1]);
    let w0 = GroupElement::longest_element(&sys, 100).unwrap();
    assert_eq!(w0, elem(&sys, &[0, 1, 2, 0, 1, 0]));

    let interval = enumerate_interval(&u, &w0).unwrap();
    let element_words: [&[usize]; 8] = [
        &[0, 1],
        &[0, 1, 2],
        &[0, 1, 0],
        &[0, 1, 0, 2],
        &[0, 1, 2, 1],
        &[0, 1, 2, 0, 1],
        &[0, 1, 2, 1, 0],
        &[0, 1, 2, 0, 1, 0],
    ];
    let expected: BTreeSet<GroupElement> = element_words.iter().map(|w| elem(&sys, w)).collect();
    let got: BTreeSet<GroupElement> = interval.elements().iter().cloned().collect();
    assert_eq!(got, expected, "interval must have exactly the 8 elements");

    let complex = CoxComplex::build(&u, &w0).unwrap();
    let vertex = |word: &[usize], gen: usize| CoxVertex {
        gen,
        quotient: elem(&sys, word),
    };
    // Facets P(w), one per interval element, with their label tuples.
    type FacetRow = (&'static [usize], [(&'static [usize], usize); 3], [u32; 3]);
    let expected_facets: [FacetRow; 8] = [
        (&[0, 1], [(&[0], 0), (&[0, 1], 1), (&[], 2)], [1, 4, 7]),
        (&[0, 1, 2], [(&[0], 0), (&[0, 1], 1), (&[0, 1, 2], 2)], [1, 4, 8]),
        (&[0, 1, 0], [(&[1, 0], 0), (&[0, 1], 1), (&[], 2)], [2, 4, 7]),
        (
            &[0, 1, 0, 2],
            [(&[1, 0], 0), (&[0, 1], 1), (&[0, 1, 2], 2)],
            [2, 4, 8],
        ),
        (
            &[0, 1, 2, 1],
            [(&[0], 0), (&[0, 2, 1], 1), (&[0, 1, 2], 2)],
            [1, 5, 8],
        ),
        (
            &[0, 1, 2, 0, 1],
            [(&[1, 0], 0), (&[1, 0, 2, 1], 1), (&[0, 1, 2], 2)],
            [2, 6, 8],
        ),
        (
            &[0, 1, 2, 1, 0],
            [(&[2, 1, 0], 0), (&[0, 2, 1], 1), (&[0, 1, 2], 2)],
            [3, 5, 8],
        ),
        (
            &[0, 1, 2, 0, 1, 0],
            [(&[2, 1, 0], 0), (&[1, 0, 2, 1], 1), (&[0, 1, 2], 2)],
            [3, 6, 8],
        ),
    ];
    for (word, verts, labels) in expected_facets {
        let w = elem(&sys, word);
        let expected_facet: BTreeSet<CoxVertex> =
            verts.iter().map(|&(q, s)| vertex(q, s)).collect();
        assert_eq!(
            facet_of(&w).into_iter().collect::<BTreeSet<_>>(),
            expected_facet,
            "facet of {w}"
        );
        assert_eq!(
            complex.tuple_of(&w).unwrap().verts(),
            labels,
            "label tuple of {w}"
        );
    }

    let x = complex.pure_complex();
    assert_eq!(x.f_polynomial(), IntPolynomial::from_i64s(&[1, 8, 15, 8]));
    assert_eq!(x.h_polynomial(), IntPolynomial::from_i64s(&[1, 5, 2]));
    assert_eq!(complex.h_by_descent(), IntPolynomial::from_i64s(&[1, 5, 2]));
    println!("[PASS] criterion 1: A3 interval, facets, labels and polynomials reproduce");
}

#[test]
fn criterion_02_b4_reflection_sets() {
    let sys = CoxeterSystem::from_shorthand("B4").unwrap();
    let u = elem(&sys, &[2, 3, 2]);
    let v = elem(&sys, &[2, 3, 2, 1, 0, 2, 3]);

    assert_eq!(v.project_drop(3), elem(&sys, &[1, 2, 3]));
    assert_eq!(v.project_drop(0), elem(&sys, &[3, 2, 1, 0]));

    let tl_u = reflections(&sys, &[&[2], &[3], &[2, 3, 2]]);
    let tl_v3 = reflections(&sys, &[&[1], &[1, 2, 1], &[1, 2, 3, 2, 1]]);
    let tl_v0 = reflections(
        &sys,
        &[&[3], &[2, 3, 2], &[1, 2, 3, 2, 1], &[3, 2, 1, 0, 1, 2, 3]],
    );
    let tl_v = reflections(
        &sys,
        &[
            &[1],
            &[2],
            &[3],
            &[1, 2, 1],
            &[2, 3, 2],
            &[1, 2, 3, 2, 1],
            &[3, 2, 1, 0, 1, 2, 3],
        ],
    );
    assert_eq!(u.left_inversion_reflections(), tl_u);
    assert_eq!(v.project_drop(3).left_inversion_reflections(), tl_v3);
    assert_eq!(v.project_drop(0).left_inversion_reflections(), tl_v0);
    assert_eq!(v.left_inversion_reflections(), tl_v);

    // Union identity over D_R(u⁻¹v) = {s0, s3}.
    let w = u.inverse().multiply(&v).unwrap();
    assert_eq!(w.right_descents().iter().collect::<Vec<_>>(), vec![0, 3]);
    let mut union = tl_u.clone();
    union.extend(tl_v0.iter().cloned());
    union.extend(tl_v3.iter().cloned());
    assert_eq!(union, tl_v);
    assert!(check_reflection_formula(&u, &v).unwrap().holds);
    println!("[PASS] criterion 2: B4 reflection sets and the union identity reproduce");
}

#[test]
fn criterion_03_reflection_formula_suite() {
    for name in ["A3", "B3"] {
        let sys = CoxeterSystem::from_shorthand(name).unwrap();
        let all = group(&sys);
        let mut comparable = 0;
        for u in &all {
            for v in &all {
                if !u.weak_leq(v).unwrap() {
                    continue;
                }
                comparable += 1;
                let report = check_reflection_formula(u, v).unwrap();
                assert!(
                    report.holds,
                    "{name}: identity failed at u = {u}, v = {v}; witness {:?}",
                    report.counterexample
                );
            }
        }
        match name {
            "A3" => assert_eq!(comparable, 151),
            _ => assert_eq!(comparable, 457),
        }
    }

    // 500 random pairs u ≤_R v in B4 with ℓ(v) ≤ 10.
    let sys = CoxeterSystem::from_shorthand("B4").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1814);
    for _ in 0..500 {
        let word: Vec<usize> = (0..10).map(|_| rng.gen_range(0..4)).collect();
        let v = elem(&sys, &word);
        let mut u = v.clone();
        let steps = rng.gen_range(0..=v.len());
        for _ in 0..steps {
            let descents: Vec<usize> = u.right_descents().iter().collect();
            if descents.is_empty() {
                break;
            }
            let s = descents[rng.gen_range(0..descents.len())];
            u = u.mul_gen(s).unwrap();
        }
        assert!(u.weak_leq(&v).unwrap());
        let report = check_reflection_formula(&u, &v).unwrap();
        assert!(report.holds, "B4: identity failed at u = {u}, v = {v}");
    }
    println!(
        "[PASS] criterion 3: reflection-set identity holds on all of A3, B3 and 500 B4 samples"
    );
}

#[test]
fn criterion_04_projection_splitting() {
    let sys = CoxeterSystem::from_shorthand("A3").unwrap();
    let all = group(&sys);
    let rank = sys.rank();
    for v in &all {
        let below = subword_products(v);
        let pv: Vec<GroupElement> = (0..rank).map(|s| v.project_drop(s)).collect();
        for u in &all {
            let oracle = below.contains(u);
            // Splitting over every generator.
            let split_all = (0..rank).all(|s| u.project_drop(s).bruhat_leq(&pv[s]).unwrap());
            assert_eq!(split_all, oracle, "rank splitting at {u}, {v}");
            // Splitting over the right descents of u only.
            let split_descents = u
                .right_descents()
                .iter()
                .all(|s| u.project_drop(s).bruhat_leq(&pv[s]).unwrap());
            assert_eq!(split_descents, oracle, "descent splitting at {u}, {v}");
            // Facet intersection as the weak-cover detector.
            assert!(check_cover_criterion(u, v).unwrap(), "cover criterion at {u}, {v}");
        }
    }
    println!("[PASS] criterion 4: projection splitting corollaries hold on all 576 S4 pairs");
}

#[test]
fn criterion_05_hachimori_complex() {
    let hachimori = load_data_complex("hachimori.facets");
    assert_eq!(hachimori.facet_count(), 13);
    assert!(is_shelling(&hachimori.lex_sequence()));
    assert!(all_extensions_shelling(&hachimori, ShellMode::Shelling, true, 100_000).unwrap());
    let extension_count = hachimori.bruhat_poset().linear_extensions(100_000).unwrap().len();
    assert_eq!(extension_count, 222);

    // Undoing the relabeling 6457312 restores names under which the
    // lexicographic order fails.
    let hostile = hachimori.relabel(&SIGMA_INV).unwrap();
    assert!(!is_shelling(&hostile.lex_sequence()));
    assert_eq!(hostile.relabel(&SIGMA).unwrap(), hachimori);
    // A working labeling still exists, and 6457312 itself is one.
    let witness = decide_linear_shellability(&hostile, ShellMode::Shelling, 9).unwrap();
    assert!(witness.is_some());
    println!(
        "[PASS] criterion 5: Hachimori lex order shells, all {extension_count} extensions shell, \
         and the hostile relabeling breaks lex"
    );
}

#[test]
fn criterion_06_no_labeling_for_the_20_facet_complex() {
    let nls = load_data_complex("not-linearly-shellable.facets");
    assert_eq!(nls.facet_count(), 20);
    assert_eq!(nls.vertex_set().len(), 8);
    assert_eq!(nls.bruhat_poset().covers().len(), 22);

    let verdict = decide_linear_shellability(&nls, ShellMode::Shelling, 9).unwrap();
    assert!(verdict.is_none(), "no vertex labeling may make lex a shelling order");

    let order = find_shelling_order(&nls, ShellMode::Shelling)
        .expect("the complex is shellable by a non-extension order");
    assert!(is_shelling(&order));
    assert_eq!(order.len(), 20);
    // The order cannot extend the componentwise order on the facets, since
    // no extension under these labels is a shelling order.
    let sorted = nls.facet_vec();
    let as_indices: Vec<usize> = order
        .seq()
        .iter()
        .map(|f| sorted.binary_search(f).unwrap())
        .collect();
    assert!(!nls.bruhat_poset().is_linear_extension(&as_indices));
    println!(
        "[PASS] criterion 6: all 40320 labelings fail for the 20-facet complex, \
         yet a shelling order exists"
    );
}

/// Deterministic sample for criteria 7 and 8: 200 complexes with n ≤ 8,
/// k ≤ 4, at most 12 facets and at most 10^4 linear extensions.
fn criterion_07_sample() -> Vec<PureComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut out = Vec::new();
    while out.len() < 200 {
        let n = rng.gen_range(4..=8u32);
        let k = rng.gen_range(2..=4.min(n as usize - 1));
        let x = random_pure_complex(&mut rng, n, k, 12);
        if x.bruhat_poset().linear_extensions(10_000).is_err() {
            continue;
        }
        out.push(x);
    }
    out
}

#[test]
fn criterion_07_lex_decides_all_extensions() {
    let sample = criterion_07_sample();
    for x in &sample {
        for mode in [ShellMode::Shelling, ShellMode::Strong] {
            let lex_verdict = shelling_violation(&x.lex_sequence(), mode).is_none();
            // The exhaustive run asserts internally that every linear
            // extension agrees with the lexicographic verdict.
            let all = all_extensions_shelling(x, mode, true, 10_000).unwrap();
            assert_eq!(all, lex_verdict);
        }
    }
    println!(
        "[PASS] criterion 7: lex verdict equals the all-extensions verdict on 200 seeded \
         complexes, both modes"
    );
}

#[test]
fn criterion_08_tail_swap_on_encountered_orders() {
    let mut candidates: Vec<(FacetSequence, ShellMode)> = Vec::new();

    // Orders from criterion 5.
    let hachimori = load_data_complex("hachimori.facets");
    let hachimori_facets = hachimori.facet_vec();
    candidates.push((hachimori.lex_sequence(), ShellMode::Shelling));
    for ext in hachimori.bruhat_poset().linear_extensions(100_000).unwrap() {
        let seq =
            FacetSequence::new(ext.iter().map(|&i| hachimori_facets[i].clone()).collect()).unwrap();
        candidates.push((seq, ShellMode::Shelling));
    }

    // The order exhibited for criterion 6.
    let nls = load_data_complex("not-linearly-shellable.facets");
    candidates.push((
        find_shelling_order(&nls, ShellMode::Shelling).unwrap(),
        ShellMode::Shelling,
    ));

    // Orders from criterion 7.
    for x in criterion_07_sample() {
        let facets = x.facet_vec();
        let extensions = x.bruhat_poset().linear_extensions(10_000).unwrap();
        for mode in [ShellMode::Shelling, ShellMode::Strong] {
            if shelling_violation(&x.lex_sequence(), mode).is_some() {
                continue;
            }
            candidates.push((x.lex_sequence(), mode));
            for ext in &extensions {
                let seq = FacetSequence::new(ext.iter().map(|&i| facets[i].clone()).collect())
                    .unwrap();
                candidates.push((seq, mode));
            }
        }
    }

    let mut swapped_count = 0usize;
    for (seq, mode) in &candidates {
        debug_assert!(shelling_violation(seq, *mode).is_none());
        let h = seq.len();
        if h < 3 {
            continue;
        }
        let overlap = seq.seq()[h - 2]
            .verts()
            .iter()
            .filter(|v| seq.seq()[h - 1].contains(**v))
            .count();
        if overlap >= seq.k() - 1 {
            continue;
        }
        // tail_swap asserts that the swapped order passes the same checker.
        tail_swap(seq, *mode).unwrap();
        swapped_count += 1;
    }
    assert!(swapped_count > 20, "only {swapped_count} tail pairs qualified");
    println!(
        "[PASS] criterion 8: {swapped_count} qualifying tail swaps preserved their shelling kind \
         (out of {} orders)",
        candidates.len()
    );
}

#[test]
fn criterion_09_thin_subthin_classification() {
    let mut intervals = 0usize;
    for name in ["A2", "A3", "B3"] {
        let sys = CoxeterSystem::from_shorthand(name).unwrap();
        let all = group(&sys);
        let w0 = GroupElement::longest_element(&sys, 100).unwrap();
        for u in &all {
            for v in &all {
                if !u.weak_leq(v).unwrap() {
                    continue;
                }
                intervals += 1;
                let complex = CoxComplex::build(u, v).unwrap();
                // Ridge counts ≤ 2 are asserted inside classify_thin.
                let report = complex.classify_thin();
                let expected = if u.is_identity() && *v == w0 {
                    ThinClass::Thin
                } else {
                    ThinClass::Subthin
                };
                assert_eq!(report.class, expected, "{name}: interval [{u}, {v}]");

                // Cross-checks on every interval: the descent formula matches
                // the face-count h-polynomial, and the lexicographic order on
                // the label tuples is a shelling order.
                let x = complex.pure_complex();
                assert_eq!(complex.h_by_descent(), x.h_polynomial(), "{name}: [{u}, {v}]");
                assert!(is_shelling(&x.lex_sequence()), "{name}: [{u}, {v}]");
                if complex.interval().len() <= 12 {
                    if let Ok(exts) = complex.preceq_poset().linear_extensions(10_000) {
                        let tuples = complex.tuples();
                        for ext in exts {
                            let seq = FacetSequence::new(
                                ext.iter().map(|&i| tuples[i].clone()).collect(),
                            )
                            .unwrap();
                            assert!(is_shelling(&seq), "{name}: [{u}, {v}]");
                        }
                    }
                }
            }
        }
    }
    println!(
        "[PASS] criterion 9: thin exactly for [e, w0], subthin otherwise, across {intervals} \
         intervals in A2, A3, B3"
    );
}

#[test]
fn criterion_10_strong_shelling_fixtures() {
    let u24 = PureComplex::from_facets(all_k_subsets(4, 2)).unwrap();
    assert!(is_strong_shelling(&u24.revlex_sequence()));
    let u35 = PureComplex::from_facets(all_k_subsets(5, 3)).unwrap();
    assert!(is_strong_shelling(&u35.revlex_sequence()));

    // Order ideal of [5]^3 generated by (2,4,5): every increasing triple
    // componentwise below the generator.
    let top = Facet::new(vec![2, 4, 5]).unwrap();
    let ideal: Vec<Facet> = all_k_subsets(5, 3)
        .into_iter()
        .filter(|f| gale_leq(f, &top).unwrap())
        .collect();
    assert_eq!(ideal.len(), 9);
    let shifted = PureComplex::from_facets(ideal).unwrap();
    assert!(is_strong_shelling(&shifted.lex_sequence()));
    println!(
        "[PASS] criterion 10: revlex strongly shells U(2,4) and U(3,5); lex strongly shells \
         the shifted ideal"
    );
}

#[test]
fn criterion_11_gale_spot_values() {
    let a = Facet::new(vec![1, 3, 5, 7]).unwrap();
    let b = Facet::new(vec![1, 4, 6, 8]).unwrap();
    assert!(gale_leq(&a, &b).unwrap());
    let c = Facet::new(vec![1, 4, 6, 7]).unwrap();
    let d = Facet::new(vec![2, 3, 7, 8]).unwrap();
    assert!(!gale_leq(&c, &d).unwrap());
    println!("[PASS] criterion 11: componentwise order spot values agree");
}
