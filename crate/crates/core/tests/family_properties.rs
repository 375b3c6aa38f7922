use std::collections::BTreeMap;

use foulkes::families::{
    close, enumerate_closed, enumerate_of_type, family_type, is_closed, minimal_types,
};
use foulkes::partitions::{dominates, partitions_of, star, star_preimage, strictly_dominates};
use foulkes::subsets::{downset, level, lower_covers, majorizes};
use foulkes::{Guards, MSubset, Partition, SetFamily};
use proptest::prelude::*;

/// All `k`-subsets of `{1, …, max}` in lexicographic order.
fn subsets(k: usize, max: usize) -> Vec<MSubset> {
    fn rec(k: usize, max: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<MSubset>) {
        if cur.len() == k {
            out.push(MSubset::new(cur.clone()).unwrap());
            return;
        }
        for x in start..=max {
            cur.push(x);
            rec(k, max, x + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, max, 1, &mut Vec::new(), &mut out);
    out
}

/// All `k`-element choices from `items`.
fn choose<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut with: Vec<Vec<T>> = choose(&items[1..], k - 1)
        .into_iter()
        .map(|mut rest| {
            rest.insert(0, items[0].clone());
            rest
        })
        .collect();
    with.extend(choose(&items[1..], k));
    with
}

/// Types of shape `(m^n)` realised by at least one family, found without
/// using closedness: `λ` is minimal when no `μ ⊲ λ` has a family.
fn brute_force_minimal_types(m: usize, n: usize) -> Vec<(Partition, usize)> {
    let realised: BTreeMap<Partition, usize> = partitions_of(m * n)
        .filter_map(|lam| {
            let count = enumerate_of_type(m, n, &lam).len();
            (count > 0).then_some((lam, count))
        })
        .collect();
    let mut out: Vec<(Partition, usize)> = realised
        .iter()
        .filter(|(lam, _)| {
            !realised
                .keys()
                .any(|mu| strictly_dominates(lam, mu).unwrap())
        })
        .map(|(lam, &c)| (lam.clone(), c))
        .collect();
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out
}

#[test]
fn majorization_is_connected_by_lower_covers() {
    for m in 1..=4 {
        let all = subsets(m, 9);
        for y in &all {
            let below = downset(y);
            for x in &all {
                assert_eq!(majorizes(x, y).unwrap(), below.contains(x), "{x} vs {y}");
            }
        }
    }
}

#[test]
fn bottom_is_the_unique_minimal_subset() {
    for m in 1..=4 {
        let all = subsets(m, 12);
        let minimal: Vec<&MSubset> = all.iter().filter(|x| lower_covers(x).is_empty()).collect();
        assert_eq!(minimal, vec![&MSubset::bottom(m)]);
        assert!(all
            .iter()
            .all(|x| majorizes(&MSubset::bottom(m), x).unwrap()));
    }
}

#[test]
fn downsets_are_closed_and_large_enough() {
    for m in 1..=5 {
        for a in subsets(m, 12) {
            let d = downset(&a);
            assert!(d.len() > level(&a), "|downset({a})| = {}", d.len());
            for x in d.sets() {
                for y in lower_covers(x) {
                    assert!(d.contains(&y), "{y} missing from downset({a})");
                }
            }
        }
    }
}

#[test]
fn closed_families_are_unions_of_downsets() {
    let g = Guards::default();
    for m in 1..=4 {
        for n in 1..=5 {
            for f in enumerate_closed(m, n, &g).unwrap() {
                assert!(is_closed(&f));
                assert_eq!(
                    SetFamily::union_of_downsets(&f.maximal_elements()).unwrap(),
                    f
                );
            }
        }
    }
}

#[test]
fn closed_enumeration_matches_a_subset_scan() {
    let g = Guards::default();
    for m in 1..=3 {
        for n in 1..=4 {
            let universe = subsets(m, m + n - 1);
            let mut scanned: Vec<SetFamily> = choose(&universe, n)
                .into_iter()
                .map(|sets| SetFamily::new(m, sets).unwrap())
                .filter(is_closed)
                .collect();
            scanned.sort();
            assert_eq!(enumerate_closed(m, n, &g).unwrap(), scanned, "({m}^{n})");
        }
    }
}

#[test]
fn type_enumeration_matches_a_subset_scan() {
    for m in 1..=3 {
        for n in 1..=4 {
            let bound = m + n - 1;
            let mut by_type: BTreeMap<Partition, usize> = BTreeMap::new();
            for sets in choose(&subsets(m, bound), n) {
                if let Ok(t) = family_type(&SetFamily::new(m, sets).unwrap()) {
                    *by_type.entry(t).or_default() += 1;
                }
            }
            for (lam, count) in by_type {
                let found = enumerate_of_type(m, n, &lam)
                    .into_iter()
                    .filter(|f| f.max_entry() <= bound)
                    .count();
                assert_eq!(found, count, "({m}^{n}) type {lam}");
            }
        }
    }
}

#[test]
fn minimal_types_match_brute_force() {
    let g = Guards::default();
    for m in 1..=3 {
        for n in 1..=4 {
            let got: Vec<(Partition, usize)> = minimal_types(m, n, &g)
                .unwrap()
                .into_iter()
                .map(|t| (t.lambda, t.multiplicity))
                .collect();
            assert_eq!(got, brute_force_minimal_types(m, n), "({m}^{n})");
        }
    }
}

#[test]
fn unique_implies_minimal_implies_closed() {
    for m in 1..=3 {
        for n in 1..=5 {
            let minimal: Vec<Partition> = brute_force_minimal_types(m, n)
                .into_iter()
                .map(|(l, _)| l)
                .collect();
            for lam in partitions_of(m * n) {
                let fams = enumerate_of_type(m, n, &lam);
                if fams.len() == 1 {
                    assert!(
                        minimal.contains(&lam),
                        "({m}^{n}): unique type {lam} not minimal"
                    );
                }
                if minimal.contains(&lam) {
                    assert!(
                        fams.iter().all(is_closed),
                        "({m}^{n}): minimal type {lam} has an open family"
                    );
                }
            }
        }
    }
}

#[test]
fn wide_closed_families_share_an_initial_segment() {
    let g = Guards::default();
    for (m, n) in [(3, 2), (3, 3), (4, 2), (4, 3), (4, 4), (5, 3)] {
        let prefix: Vec<usize> = (1..=m - n + 1).collect();
        for f in enumerate_closed(m, n, &g).unwrap() {
            for x in f.sets() {
                assert!(
                    prefix.iter().all(|&i| x.contains(i)),
                    "({m}^{n}): {x} in {f}"
                );
            }
        }
    }
}

#[test]
fn short_closed_families_have_star_types() {
    let g = Guards::default();
    for m in 1..=5 {
        for n in 1..=5 {
            for f in enumerate_closed(m, n, &g).unwrap() {
                let t = family_type(&f).unwrap();
                assert!(star_preimage(m, n, &t).is_some(), "({m}^{n}): {t}");
            }
        }
    }
}

#[test]
fn star_types_have_unique_families() {
    for m in 1..=16 {
        for n in 1..=16 / m {
            for nu in partitions_of(n - 1).filter(|nu| nu.len() <= m) {
                let lam = star(m, n, &nu).unwrap();
                let fams = enumerate_of_type(m, n, &lam);
                assert_eq!(fams.len(), 1, "({m}^{n})⋆{nu} = {lam}");
                assert!(is_closed(&fams[0]));
            }
        }
    }
}

#[test]
fn minimal_types_are_reverse_lexicographic() {
    let types = minimal_types(3, 5, &Guards::default()).unwrap();
    assert!(types.windows(2).all(|w| w[0].lambda > w[1].lambda));
}

fn family() -> impl Strategy<Value = SetFamily> {
    (1usize..=4, 1usize..=5).prop_flat_map(|(m, n)| {
        let universe = subsets(m, 8);
        prop::sample::subsequence(universe, n)
            .prop_map(move |sets| SetFamily::new(m, sets).unwrap())
    })
}

proptest! {
    #[test]
    fn closing_lowers_the_type(f in family()) {
        let c = close(&f);
        prop_assert!(is_closed(&c));
        prop_assert_eq!((c.m(), c.n()), (f.m(), f.n()));
        if is_closed(&f) {
            prop_assert_eq!(&c, &f);
        } else {
            prop_assert_ne!(&c, &f);
        }
        if let Ok(t) = family_type(&f) {
            let tc = family_type(&c).unwrap();
            prop_assert!(dominates(&t, &tc).unwrap(), "{} does not dominate {}", t, tc);
        }
    }

    #[test]
    fn family_json_round_trip(f in family()) {
        let text = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<SetFamily>(&text).unwrap(), f);
    }
}
