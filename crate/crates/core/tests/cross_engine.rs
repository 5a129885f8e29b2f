use std::collections::BTreeSet;

use jahangir::combinatorics::sigma;
use jahangir::cycles::{census_j2m, verify_census};
use jahangir::enumeration::{enumerate_all, enumerate_jahangir, is_spanning_tree};
use jahangir::matrix_tree::count_spanning_trees_det;
use jahangir::{build_jahangir, JahangirParams};
use num_bigint::BigUint;

fn params(n: usize, m: usize) -> JahangirParams {
    JahangirParams::new(n, m).unwrap()
}

#[test]
fn combinatorial_equals_kirchhoff() {
    for n in 2..=5 {
        for m in 3..=8 {
            let g = build_jahangir(params(n, m));
            assert_eq!(sigma(n, m).unwrap().total, count_spanning_trees_det(&g).unwrap().0, "J({n}, {m})");
        }
    }
}

#[test]
fn kirchhoff_reaches_large_table_values() {
    let g = build_jahangir(params(3, 16));
    assert_eq!(count_spanning_trees_det(&g).unwrap().0, BigUint::from(77_132_286_525u64));
}

#[test]
fn structured_and_generic_enumerations_coincide() {
    for (n, m) in [(2, 3), (2, 4), (3, 3), (2, 5)] {
        let p = params(n, m);
        let g = build_jahangir(p);
        let generic: Vec<Vec<usize>> = enumerate_all(&g, None).map(|t| t.into_edge_indices()).collect();
        let structured: Vec<Vec<usize>> = enumerate_jahangir(p, None).map(|t| t.into_edge_indices()).collect();
        let expected: usize = sigma(n, m).unwrap().total.try_into().unwrap();
        assert_eq!(generic.len(), expected);
        assert_eq!(structured.len(), expected);

        let generic_set: BTreeSet<_> = generic.iter().cloned().collect();
        let structured_set: BTreeSet<_> = structured.iter().cloned().collect();
        assert_eq!(generic_set.len(), expected, "generic duplicates");
        assert_eq!(structured_set.len(), expected, "structured duplicates");
        assert_eq!(generic_set, structured_set);
        assert!(generic.windows(2).all(|w| w[0] < w[1]), "generic output is lexicographic");
        assert!(structured.iter().all(|t| is_spanning_tree(&g, t)));
    }
}

#[test]
fn structured_trees_cut_one_rim_edge_per_arc() {
    let p = params(3, 5);
    let rim = p.rim_len();
    for tree in enumerate_jahangir(p, None) {
        let kept: Vec<usize> = (1..=p.m()).filter(|&j| tree.contains(p.spoke_edge(j))).collect();
        assert!(!kept.is_empty());
        let deleted: Vec<usize> = (0..rim).filter(|&e| !tree.contains(e)).collect();
        assert_eq!(deleted.len(), kept.len());
        for (i, &j) in kept.iter().enumerate() {
            let start = (j - 1) * p.n();
            let next = kept[(i + 1) % kept.len()];
            let mut len = (next + p.m() - j) % p.m() * p.n();
            if len == 0 {
                len = rim;
            }
            let in_arc = deleted.iter().filter(|&&e| (e + rim - start) % rim < len).count();
            assert_eq!(in_arc, 1);
        }
    }
}

#[test]
fn cycle_census_against_generic_search() {
    for m in 3..=8 {
        let report = verify_census(m).unwrap();
        assert_eq!(report.records, m * m);
        assert!(report.matches(), "m = {m}");
        assert_eq!(report.generic_cycles, m * m - m + 1);
        assert_eq!(report.discrepancies.len(), 1);
        assert_eq!(report.discrepancies[0].k, m);
    }
    for m in 3..=12 {
        let records = census_j2m(m).unwrap();
        assert_eq!(records.len(), m * m);
        for r in records.iter().filter(|r| r.k() < m) {
            assert_eq!(r.length, r.claimed_length);
        }
    }
}
