//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! All arithmetic is exact, so the only tolerances are wall-clock budgets.
//! They are pinned below and measured on the optimized test profile.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use foulkes::dataset::{oracle_check, rectangle_row};
use foulkes::families::{
    close, conj_type, enumerate_closed, enumerate_of_type, family_type, is_closed, minimal_types,
};
use foulkes::generalized::{candidate_unions, minimal_candidates, verify_against_oracle};
use foulkes::oracle::{
    chi_value, cycle_types, decompose, decompose_with, foulkes_value_with, CycleType, Method,
};
use foulkes::partitions::{conjugate, partitions_of, star, star_preimage, strictly_dominates};
use foulkes::specht::{column_group, verify_hom};
use foulkes::subsets::downset;
use foulkes::{Composition, Guards, MSubset, Partition, SetFamily};

const BUDGET_MINIMAL_3_4: Duration = Duration::from_secs(1);
const BUDGET_DECOMPOSE_NAIVE: Duration = Duration::from_secs(120);
const BUDGET_DECOMPOSE_ASSEMBLED: Duration = Duration::from_secs(10);
const BUDGET_VERIFY_HOM: Duration = Duration::from_secs(30);

/// Largest `m·n` in the oracle cross-check and Garnir sweep.
const DESK_POINTS: usize = 12;
/// Largest degree for the assembled/naive comparison.
const COUNTING_DEGREE: usize = 10;
/// Largest degree for the exact inner-product sweep.
const INNER_PRODUCT_DEGREE: usize = 12;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn s(elements: &[usize]) -> MSubset {
    MSubset::new(elements.to_vec()).unwrap()
}

fn family(lists: &[&[usize]]) -> SetFamily {
    SetFamily::from_lists(lists).unwrap()
}

fn generated(generators: &[&[usize]]) -> SetFamily {
    let gens: Vec<MSubset> = generators.iter().map(|g| s(g)).collect();
    SetFamily::union_of_downsets(&gens).unwrap()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn e(err: foulkes::Error) -> String {
    err.to_string()
}

fn minimal_3_4() -> Outcome {
    let (types, took) = timed(|| minimal_types(3, 4, &Guards::default()));
    let types = types.map_err(e)?;
    let expected = [
        (
            p(&[6, 2, 2, 2]),
            family(&[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[1, 2, 6]]),
        ),
        (
            p(&[5, 4, 2, 1]),
            family(&[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[1, 3, 4]]),
        ),
        (
            p(&[4, 4, 4]),
            family(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]),
        ),
    ];
    ensure(types.len() == 3, format!("{} minimal types", types.len()))?;
    for (t, (lam, f)) in types.iter().zip(&expected) {
        ensure(
            &t.lambda == lam,
            format!("type {} where {lam} expected", t.lambda),
        )?;
        ensure(
            t.multiplicity == 1,
            format!("d = {} for {lam}", t.multiplicity),
        )?;
        ensure(
            t.families == [f.clone()],
            format!("families of type {lam} differ"),
        )?;
    }
    ensure(took < BUDGET_MINIMAL_3_4, format!("took {took:?}"))?;
    Ok(format!("three families, d = 1 each, {took:?}"))
}

fn decompose_3_3_3_3() -> Outcome {
    let g = Guards::default();
    let mu = p(&[3, 3, 3, 3]);
    let (assembled, t_assembled) = timed(|| decompose_with(&mu, &g, Method::Assembled));
    let (naive, t_naive) = timed(|| decompose_with(&mu, &g, Method::Naive));
    let d = assembled.map_err(e)?;
    ensure(
        naive.map_err(e)? == d,
        "naive and assembled decompositions differ",
    )?;
    let labels = [p(&[6, 2, 2, 2]), p(&[5, 4, 2, 1]), p(&[4, 4, 4])];
    for lam in &labels {
        ensure(
            d.multiplicity(lam) == 1,
            format!("multiplicity {} at {lam}", d.multiplicity(lam)),
        )?;
    }
    let mut below = 0;
    for nu in partitions_of(12) {
        if labels
            .iter()
            .any(|lam| strictly_dominates(lam, &nu).unwrap())
        {
            below += 1;
            ensure(
                d.multiplicity(&nu) == 0,
                format!("{nu} occurs below a minimal label"),
            )?;
        }
    }
    ensure(
        t_assembled < BUDGET_DECOMPOSE_ASSEMBLED,
        format!("assembled took {t_assembled:?}"),
    )?;
    ensure(
        t_naive < BUDGET_DECOMPOSE_NAIVE,
        format!("naive took {t_naive:?}"),
    )?;
    Ok(format!(
        "mult 1 at the three labels, 0 at {below} dominated labels; assembled {t_assembled:?}, naive {t_naive:?}"
    ))
}

fn oracle_cross_check() -> Outcome {
    let g = Guards::default();
    let mut rows = 0;
    for m in 1..=DESK_POINTS {
        for n in 1..=DESK_POINTS / m {
            let row = rectangle_row(m, n, &g).map_err(e)?;
            if m % 2 == 0 {
                ensure(
                    row.minimal.len() == 1 && row.minimal[0].lambda == Partition::rectangle(m, n),
                    format!("even row ({m}^{n}) is not the rectangle"),
                )?;
            }
            let check = oracle_check(m, n, &row.minimal, &g).map_err(e)?;
            ensure(
                check.verified,
                format!("({m}^{n}): {}", check.mismatches.join("; ")),
            )?;
            rows += 1;
        }
    }
    Ok(format!(
        "{rows} shapes with m·n <= {DESK_POINTS} agree with the oracle"
    ))
}

fn decompose_3_3_3() -> Outcome {
    let d = decompose(&p(&[3, 3, 3]), &Guards::default()).map_err(e)?;
    let got: Vec<(Partition, u64)> = d
        .constituents
        .iter()
        .map(|c| (c.lambda.clone(), c.mult))
        .collect();
    let expected = vec![
        (p(&[9]), 1),
        (p(&[7, 2]), 1),
        (p(&[6, 3]), 1),
        (p(&[5, 2, 2]), 1),
        (p(&[4, 4, 1]), 1),
    ];
    ensure(got == expected, format!("got {got:?}"))?;
    let id = CycleType::identity(9);
    let dim: i64 = got
        .iter()
        .map(|(l, k)| chi_value(l, &id).unwrap() * *k as i64)
        .sum();
    // 9! / (3!^3 · 3!)
    ensure(dim == 280, format!("dimension {dim}"))?;
    Ok("five constituents of multiplicity 1, dimension 280".into())
}

fn downset_and_closure() -> Outcome {
    let p_fam = downset(&s(&[2, 4, 6, 8]));
    ensure(p_fam.len() == 42, format!("|downset| = {}", p_fam.len()))?;
    ensure(is_closed(&p_fam), "downset not closed")?;
    let q = p_fam
        .exchange(
            &[s(&[2, 4, 6, 8]), s(&[1, 3, 5, 7])],
            &[s(&[1, 2, 7, 8]), s(&[3, 4, 5, 6])],
        )
        .map_err(e)?;
    ensure(!is_closed(&q), "modified family is closed")?;
    let c = close(&q);
    ensure(is_closed(&c), "closure is not closed")?;
    let (tp, tc) = (family_type(&p_fam).map_err(e)?, family_type(&c).map_err(e)?);
    ensure(
        strictly_dominates(&tp, &tc).map_err(e)?,
        format!("{tc} does not precede {tp}"),
    )?;
    Ok(format!("42 sets, closed; closure type {tc} precedes {tp}"))
}

fn closed_4_5() -> Outcome {
    let fams = enumerate_closed(4, 5, &Guards::default()).map_err(e)?;
    ensure(fams.len() == 5, format!("{} closed families", fams.len()))?;
    let mut got: Vec<Partition> = fams.iter().map(|f| family_type(f).unwrap()).collect();
    let mut expected: Vec<Partition> = [&[4][..], &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]]
        .iter()
        .map(|nu| star(4, 5, &p(nu)).unwrap())
        .collect();
    got.sort();
    expected.sort();
    ensure(got == expected, format!("types {got:?}"))?;
    Ok("five families with the five star types".into())
}

fn unique_non_star_type() -> Outcome {
    let lam = p(&[5, 5, 5, 1, 1, 1]);
    let fams = enumerate_of_type(3, 6, &lam);
    let expected = generated(&[&[1, 4, 5], &[1, 2, 5]]);
    ensure(
        fams == [expected],
        format!("{} families of type {lam}", fams.len()),
    )?;
    ensure(
        star_preimage(3, 6, &lam).is_none(),
        "type has a star preimage",
    )?;
    Ok("one family, not representable as a star type".into())
}

fn large_families() -> Outcome {
    let s_fam = generated(&[&[1, 5, 9], &[1, 6, 8], &[2, 6, 7], &[3, 4, 8], &[3, 5, 6]]);
    let s_prime = generated(&[
        &[1, 4, 9],
        &[1, 7, 8],
        &[2, 3, 9],
        &[2, 4, 8],
        &[2, 5, 7],
        &[3, 4, 7],
        &[4, 5, 6],
    ]);
    let conj = Composition::new(vec![24, 19, 17, 16, 13, 12, 10, 8, 4]);
    ensure(conj.weight() == 123, "conjugate type weight")?;
    let expected = conjugate(&conj.to_partition().unwrap());
    for (name, f) in [("S", &s_fam), ("S'", &s_prime)] {
        ensure(
            (f.m(), f.n()) == (3, 41),
            format!("{name} has shape ({}^{})", f.m(), f.n()),
        )?;
        ensure(is_closed(f), format!("{name} not closed"))?;
        ensure(
            conj_type(f) == conj,
            format!("{name} conjugate type {:?}", conj_type(f)),
        )?;
        ensure(
            family_type(f).map_err(e)? == expected,
            format!("{name} type"),
        )?;
    }
    Ok(format!("both of shape (3^41), closed, type {expected}"))
}

fn verify_hom_q() -> Outcome {
    let g = Guards::default();
    let q = family(&[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[1, 3, 4]]);
    let (v, took) = timed(|| verify_hom(&q, &g, false));
    let v = v.map_err(e)?;
    ensure(
        v.garnir.passed(),
        format!("Garnir violation {:?}", v.garnir.violation),
    )?;
    // λ' = (4,3,2,2,1), so |C(t)| = 4!·3!·2!·2!·1!.
    let order = 24 * 6 * 2 * 2;
    let enumerated = column_group(&v.lambda, &g).map_err(e)?.count();
    ensure(
        enumerated == order,
        format!("column group has {enumerated} elements"),
    )?;
    ensure(
        v.image_terms == order,
        format!("{} image terms, |C(t)| = {order}", v.image_terms),
    )?;
    ensure(v.unit_coefficients, "coefficient other than ±1")?;
    ensure(v.strips_back, "a term does not strip back to Q")?;
    ensure(took < BUDGET_VERIFY_HOM, format!("took {took:?}"))?;
    Ok(format!(
        "{} Garnir pairs vanish, {} terms = |C(t)|, all ±1, all strip to Q, {took:?}",
        v.garnir.pairs_checked, v.image_terms
    ))
}

fn garnir_sweep() -> Outcome {
    let g = Guards::default();
    let mut checked = 0;
    for m in [3, 5] {
        for n in 1..=DESK_POINTS / m {
            for f in enumerate_closed(m, n, &g).map_err(e)? {
                let v = verify_hom(&f, &g, false).map_err(e)?;
                ensure(v.passed(), format!("{f} fails: {:?}", v.garnir.violation))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} closed families pass"))
}

fn generalized_cases() -> Outcome {
    let g = Guards::default();
    let small = p(&[2, 1]);
    ensure(
        minimal_candidates(&small, &g).map_err(e)? == [small.clone()],
        "(2,1) candidates",
    )?;
    let r = verify_against_oracle(&small, &g).map_err(e)?;
    ensure(r.consistent(), "oracle disagrees on (2,1)")?;
    let mu = p(&[5, 5, 5, 5, 5, 3, 3, 3, 3, 3]);
    let odd = p(&[7, 6, 6, 6, 6, 2, 2, 2, 2, 1]);
    let (_, candidates) = candidate_unions(&mu, &g).map_err(e)?;
    ensure(
        candidates.contains(&odd),
        "counterexample is not a candidate",
    )?;
    let minimal = minimal_candidates(&mu, &g).map_err(e)?;
    ensure(
        !minimal.contains(&odd),
        "counterexample survives the filter",
    )?;
    ensure(
        (candidates.len(), minimal.len()) == (20, 19),
        format!("{} candidates, {} minimal", candidates.len(), minimal.len()),
    )?;
    Ok(format!(
        "(2,1) matches the oracle; {odd} filtered out of 20 candidates"
    ))
}

fn star_identities() -> Outcome {
    let cases: [(usize, usize, &[usize], &[usize]); 3] = [
        (5, 8, &[4, 2, 1], &[9, 7, 6, 5, 4, 4, 3, 2]),
        (5, 5, &[2, 1, 1], &[7, 6, 6, 4, 2]),
        (3, 5, &[3, 1], &[6, 4, 2, 2, 1]),
    ];
    for (m, n, nu, lam) in cases {
        let got = star(m, n, &p(nu)).map_err(e)?;
        ensure(got == p(lam), format!("({m}^{n})⋆{} = {got}", p(nu)))?;
    }
    for n in 2..=10 {
        let got = star(1, n, &p(&[n - 1])).map_err(e)?;
        ensure(got == p(&[n]), format!("(1^{n})⋆({}) = {got}", n - 1))?;
    }
    Ok("three pinned values and (1^n)⋆(n-1) = (n) for n <= 10".into())
}

fn oracle_self_consistency() -> Outcome {
    let mut g = Guards::default();
    g.oracle_points = g.oracle_points.max(INNER_PRODUCT_DEGREE);
    let mut values = 0;
    for n in 1..=COUNTING_DEGREE {
        let classes: Vec<CycleType> = cycle_types(n).collect();
        for mu in partitions_of(n) {
            for rho in &classes {
                let a = foulkes_value_with(&mu, rho, &g, Method::Assembled).map_err(e)?;
                let b = foulkes_value_with(&mu, rho, &g, Method::Naive).map_err(e)?;
                ensure(
                    a == b,
                    format!("φ^{mu}({}) = {a} assembled, {b} naive", rho.partition()),
                )?;
                values += 1;
            }
        }
    }
    let mut decomposed = 0;
    for n in 1..=INNER_PRODUCT_DEGREE {
        for mu in partitions_of(n) {
            decompose(&mu, &g).map_err(e)?;
            decomposed += 1;
        }
    }
    Ok(format!(
        "{values} character values agree for N <= {COUNTING_DEGREE}; {decomposed} exact decompositions for N <= {INNER_PRODUCT_DEGREE}"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("minimal types of (3^4)", minimal_3_4),
        ("oracle decomposition of (3^4)", decompose_3_3_3_3),
        (
            "minimal types agree with the oracle for m·n <= 12",
            oracle_cross_check,
        ),
        ("decomposition of (3^3)", decompose_3_3_3),
        ("downset of {2,4,6,8} and closure", downset_and_closure),
        ("closed families of shape (4^5)", closed_4_5),
        ("unique family of type (5,5,5,1,1,1)", unique_non_star_type),
        ("two closed families of shape (3^41)", large_families),
        ("homomorphism for type (5,4,2,1)", verify_hom_q),
        ("Garnir relations for m in {3,5}, m·n <= 12", garnir_sweep),
        ("generalized Foulkes candidates", generalized_cases),
        ("star identities", star_identities),
        ("oracle self-consistency", oracle_self_consistency),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
