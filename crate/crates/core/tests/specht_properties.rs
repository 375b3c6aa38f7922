use std::collections::BTreeMap;

use foulkes::families::{enumerate_closed, enumerate_of_type, family_type, is_closed};
use foulkes::partitions::{conjugate, partitions_of};
use foulkes::specht::{
    garnir_check, hom_image, indexed_partition, strip_indices, supports_disjoint, verify_hom,
    ColumnPermutation,
};
use foulkes::{Error, Guards, Partition, SetFamily};

fn closed_families(ms: &[usize], max_points: usize) -> Vec<SetFamily> {
    let g = Guards::default();
    ms.iter()
        .flat_map(|&m| (1..=max_points / m).map(move |n| (m, n)))
        .flat_map(|(m, n)| enumerate_closed(m, n, &g).unwrap())
        .collect()
}

#[test]
fn images_are_nonzero_and_strip_back() {
    let g = Guards::default();
    for f in closed_families(&[1, 3, 5], 12) {
        let image = hom_image(&f, &g).unwrap();
        assert!(!image.is_zero(), "{f}");
        let u = indexed_partition(&f).unwrap();
        assert_eq!(image.coefficient(&u), 1, "{f}");
        for (term, c) in image.iter() {
            assert_eq!(c.abs(), 1);
            let stripped = strip_indices(term);
            assert!(!stripped.repeated_number, "{f}: {term}");
            assert_eq!(stripped.to_family().as_ref(), Some(&f));
        }
    }
}

#[test]
fn single_transpositions_flip_the_sign() {
    let g = Guards::default();
    for f in closed_families(&[3, 5], 12) {
        let lam = family_type(&f).unwrap();
        let u = indexed_partition(&f).unwrap();
        let image = hom_image(&f, &g).unwrap();
        for (i, &height) in conjugate(&lam).parts().iter().enumerate() {
            for a in 1..=height {
                for b in a + 1..=height {
                    let tau = ColumnPermutation::transposition(i + 1, a, b);
                    assert_eq!(
                        image.coefficient(&u.apply(&tau)),
                        -1,
                        "{f}: ({}_{a} {}_{b})",
                        i + 1,
                        i + 1
                    );
                }
            }
        }
    }
}

#[test]
fn garnir_relations_hold_for_closed_families() {
    let g = Guards::default();
    let fams = closed_families(&[3, 5], 12);
    assert!(!fams.is_empty());
    for f in fams {
        let v = verify_hom(&f, &g, false).unwrap();
        assert!(v.passed(), "{f}: {:?}", v.garnir.violation);
    }
}

#[test]
fn garnir_check_detects_open_families() {
    // Every family of these shapes with a well-defined type that is not
    // closed fails some Garnir relation.
    let g = Guards::default();
    let mut open = 0;
    for (m, n) in [(3, 2), (3, 3), (3, 4)] {
        for lam in partitions_of(m * n) {
            for f in enumerate_of_type(m, n, &lam)
                .into_iter()
                .filter(|f| !is_closed(f))
            {
                open += 1;
                let report = garnir_check(&f, &g).unwrap();
                assert!(!report.passed(), "{f} passes although not closed");
                assert!(matches!(verify_hom(&f, &g, false), Err(Error::NotClosed)));
                assert!(verify_hom(&f, &g, true).unwrap().unverified);
            }
        }
    }
    assert!(open > 0);
}

#[test]
fn closed_families_have_distinct_types_at_desk_scale() {
    // No two closed families of these shapes share a type, so the support
    // check below only sees singletons and repeats.
    let g = Guards::default();
    for n in 1..=8 {
        let mut by_type: BTreeMap<Partition, usize> = BTreeMap::new();
        for f in enumerate_closed(3, n, &g).unwrap() {
            *by_type.entry(family_type(&f).unwrap()).or_default() += 1;
        }
        assert!(by_type.values().all(|&c| c == 1), "(3^{n})");
    }
}

#[test]
fn support_disjointness() {
    let g = Guards::default();
    let three = enumerate_closed(3, 4, &g).unwrap();
    for f in &three {
        assert!(supports_disjoint(std::slice::from_ref(f), &g).unwrap());
        assert!(!supports_disjoint(&[f.clone(), f.clone()], &g).unwrap());
    }
    assert!(matches!(
        supports_disjoint(&three, &g),
        Err(Error::MixedTypes(..))
    ));
    let open = SetFamily::from_lists(&[&[1, 2, 3], &[1, 2, 5]]).unwrap();
    assert!(supports_disjoint(&[open], &g).is_err());
}

#[test]
fn even_m_is_refused_by_the_garnir_check() {
    let f = SetFamily::from_lists(&[&[1, 2], &[1, 3]]).unwrap();
    assert!(matches!(
        garnir_check(&f, &Guards::default()),
        Err(Error::EvenM(2))
    ));
}
