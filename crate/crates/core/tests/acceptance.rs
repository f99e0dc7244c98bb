//! Acceptance suite: one line per criterion, non-zero exit on any failure.

mod common;

use std::time::{Duration, Instant};

use bsdh_core::chow::{self, CurveClass};
use bsdh_core::enumerate::{self, DEFAULT_CAP};
use bsdh_core::extremal::{self, basis_subsequence};
use bsdh_core::intersect::{self, BoundaryKind, DivisorClass};
use bsdh_core::{AdmissibleSeq, Algorithm, Family, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn staircase_mori_rays() -> Outcome {
    let t = Instant::now();
    for n in 2..=5 {
        let w = staircase(n);
        let mut expected = Vec::new();
        let mut pos = 0;
        for block in (1..=n).rev() {
            pos += block;
            expected.push(pos);
        }
        let got = intersect::mori_rays(&w);
        check(got == expected, || format!("n={n}: got {got:?}, expected {expected:?}"))?;
    }
    let elapsed = t.elapsed();
    check(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("n=2..5 in {elapsed:?}"))
}

fn algorithm_agreement() -> Outcome {
    let mut compared = 0usize;
    let compare = |w: &Word, compared: &mut usize| -> Result<(), String> {
        for start in 1..=w.len() {
            let comp = basis_subsequence::<i64>(w, start, Algorithm::Comp).map_err(|e| e.to_string())?;
            let weyl = basis_subsequence::<i64>(w, start, Algorithm::Weyl).map_err(|e| e.to_string())?;
            check(comp == weyl, || format!("word {w} start {start}: comp {comp} weyl {weyl}"))?;
            *compared += 1;
        }
        Ok(())
    };
    let exhaustive = exhaustive_small(6);
    for w in &exhaustive {
        compare(w, &mut compared)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut random = 0;
    for (_, systems) in systems_by_family(6) {
        for _ in 0..500 {
            let rs = &systems[rng.gen_range(0..systems.len())];
            let len = rng.gen_range(1..=14);
            compare(&random_word(&mut rng, rs, len), &mut compared)?;
            random += 1;
        }
    }
    Ok(format!(
        "{} exhaustive + {random} random words, {compared} start positions, 0 mismatches",
        exhaustive.len()
    ))
}

fn expansion_agreement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut subsets = 0usize;
    let mut five = 0usize;
    for _ in 0..100 {
        let w = random_any(&mut rng, 5..=10);
        let m = w.len();
        for mask in 1u64..1 << m {
            let seq = AdmissibleSeq::from_mask(mask);
            let fast: CurveClass<i64> = chow::expand(&w, &seq).map_err(|e| e.to_string())?;
            let oracle = chow::expand_oracle(&w, &seq).map_err(|e| e.to_string())?;
            let coroot = chow::expand_coroot(&w, &seq).map_err(|e| e.to_string())?;
            check(fast == oracle && fast == coroot, || {
                format!("word {w} I={seq}: fast {fast:?} oracle {oracle:?} coroot {coroot:?}")
            })?;
            subsets += 1;
            if seq.len() == 5 {
                let p = seq.positions();
                let closed = five_term(&w, [p[0], p[1], p[2], p[3], p[4]]);
                let got: Vec<i64> = p.iter().map(|&i| *fast.coeff(i)).collect();
                check(got == closed, || format!("word {w} I={seq}: expand {got:?} closed form {closed:?}"))?;
                five += 1;
            }
        }
    }
    Ok(format!("100 words, {subsets} subsets, {five} five-element closed forms"))
}

fn nonnegative_generation() -> Outcome {
    let sweep = |w: &Word| -> Result<usize, String> {
        let basis = extremal::extremal_basis::<i64>(w).map_err(|e| e.to_string())?;
        let m = w.len();
        for mask in 1u64..1 << m {
            let seq = AdmissibleSeq::from_mask(mask);
            let class = chow::expand(w, &seq).map_err(|e| e.to_string())?;
            let x = extremal::express_in_basis(&basis, &class).map_err(|e| e.to_string())?;
            check(x.iter().all(|&v| v >= 0), || format!("word {w} I={seq}: coordinates {x:?}"))?;
        }
        Ok((1 << m) - 1)
    };
    let mut classes = 0;
    let exhaustive = exhaustive_small(6);
    for w in &exhaustive {
        classes += sweep(w)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        classes += sweep(&random_any(&mut rng, 7..=10))?;
    }
    Ok(format!("{} exhaustive + 100 random words, {classes} classes", exhaustive.len()))
}

fn counting_identities() -> Outcome {
    for m in 1..=12 {
        let w = word(Family::A, 1, &vec![1; m]);
        let points = enumerate::all_fixed_points(&w, DEFAULT_CAP).map_err(|e| e.to_string())?.count();
        check(points == 1 << m, || format!("m={m}: {points} fixed points"))?;
        let mut per_label = std::collections::BTreeMap::new();
        let mut curves = 0usize;
        for c in enumerate::all_invariant_curves(&w, DEFAULT_CAP).map_err(|e| e.to_string())? {
            curves += 1;
            *per_label.entry(c.label()).or_insert(0usize) += 1;
        }
        check(curves == m << (m - 1), || format!("m={m}: {curves} curves"))?;
        check(per_label.len() == (1 << m) - 1, || format!("m={m}: {} labels", per_label.len()))?;
        for (label, count) in &per_label {
            let expected = 1usize << (label.first().unwrap() - 1);
            check(*count == expected, || format!("m={m}: {label} realized {count} times, expected {expected}"))?;
        }
        let report = enumerate::verify_report::<i64>(&w, DEFAULT_CAP).map_err(|e| e.to_string())?;
        for name in ["fixed_points", "curves", "label_multiplicity"] {
            let c = report.clause(name).unwrap();
            check(c.pass, || format!("m={m}: report clause {name} failed: {:?}", c.witness))?;
        }
    }
    Ok("m=1..12".into())
}

fn canonical_cross_check() -> Outcome {
    let words = exhaustive_small(6);
    let mut checked = 0;
    for w in &words {
        let k = intersect::canonical_class::<i64>(w);
        for r in 1..=w.len() {
            let formula: i64 = intersect::canonical_dot_schubert(w, r).map_err(|e| e.to_string())?;
            let line = chow::schubert_line(w, r).map_err(|e| e.to_string())?;
            let direct = intersect::divisor_dot_curve(w, &k, &line).map_err(|e| e.to_string())?;
            check(formula == direct, || format!("word {w} r={r}: formula {formula}, direct {direct}"))?;
            checked += 1;
        }
    }
    Ok(format!("{} words, {checked} lines", words.len()))
}

fn mori_fano_equivalence() -> Outcome {
    let words = exhaustive_small(8);
    let mut fano_count = 0;
    for w in &words {
        let k = intersect::canonical_class::<i64>(w);
        // curves sharing (level, bits above level) share a label and a class
        let mut labels = std::collections::HashSet::new();
        for c in enumerate::all_invariant_curves(w, DEFAULT_CAP).map_err(|e| e.to_string())? {
            labels.insert((c.level, c.bits >> c.level));
        }
        let mut nakai = true;
        for &(level, high) in &labels {
            let label = AdmissibleSeq::from_mask(high << level | 1 << (level - 1));
            let class = chow::expand(w, &label).map_err(|e| e.to_string())?;
            let kc: i64 = intersect::divisor_dot_curve(w, &k, &class).map_err(|e| e.to_string())?;
            if -kc <= 0 {
                nakai = false;
                break;
            }
        }
        let fano = intersect::is_fano(w);
        check(fano == nakai, || format!("word {w}: is_fano {fano}, Nakai {nakai}"))?;
        fano_count += usize::from(fano);
    }
    Ok(format!("{} words, {fano_count} Fano, 0 disagreements", words.len()))
}

fn a2_ample_chamber() -> Outcome {
    let w = word(Family::A, 2, &[1, 2, 1]);
    let basis = extremal::extremal_basis::<i64>(&w).map_err(|e| e.to_string())?;
    let mut ample = 0;
    for a1 in -2..=5i64 {
        for a2 in -2..=5i64 {
            for a3 in -2..=5i64 {
                let d = DivisorClass::schubert_boundary(vec![a1, a2, a3]);
                let got = intersect::toric_ample_with(&w, &basis, &d).map_err(|e| e.to_string())?;
                let expected = a1 > a2 && a2 > a3 && a3 > 0;
                check(got == expected, || format!("a=({a1},{a2},{a3}): toric_ample {got}"))?;
                ample += usize::from(got);
            }
        }
    }
    Ok(format!("512 divisors, {ample} ample"))
}

fn subcone_inclusion() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut toric = 0;
    let mut total = 0;
    for _ in 0..50 {
        let w = random_any(&mut rng, 1..=10);
        let basis = extremal::extremal_basis::<i64>(&w).map_err(|e| e.to_string())?;
        for _ in 0..1000 {
            let a: Vec<i64> = (0..w.len()).map(|_| rng.gen_range(-5..=5)).collect();
            let d = DivisorClass::lt(a.clone());
            total += 1;
            if intersect::toric_ample_with(&w, &basis, &d).map_err(|e| e.to_string())? {
                toric += 1;
                let bsdh = intersect::bsdh_ample(&d).map_err(|e| e.to_string())?;
                check(bsdh, || format!("word {w}: LT {a:?} toric ample but not BSDH ample"))?;
            }
        }
    }
    Ok(format!("{total} divisors on 50 words, {toric} toric ample, 0 counterexamples"))
}

fn lt_round_trip() -> Outcome {
    let words = exhaustive_small(6);
    for w in &words {
        let m = w.len();
        for j in 1..=m {
            let a = intersect::lt_to_boundary::<i64>(w, j).map_err(|e| e.to_string())?;
            for r in 1..=m {
                let mut via_boundary = 0i64;
                for (i, ai) in a.iter().enumerate() {
                    via_boundary += ai * i64::from(intersect::boundary_dot_schubert(w, i + 1, r, BoundaryKind::Schubert).unwrap());
                }
                let lt = i64::from(intersect::lt_dot_schubert(w, j, r).unwrap());
                check(via_boundary == lt, || format!("word {w} j={j} r={r}: {via_boundary} vs {lt}"))?;
            }
        }
    }
    let w = word(Family::A, 2, &[1, 2, 1]);
    let l3 = intersect::lt_to_boundary::<i64>(&w, 3).map_err(|e| e.to_string())?;
    check(l3 == vec![0, 1, 1], || format!("A2 (1,2,1): L_3 -> {l3:?}"))?;
    Ok(format!("{} words; A2 (1,2,1) gives 𝓛_3 = D_2 + D_3", words.len()))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 staircase Mori rays", staircase_mori_rays),
        ("2 comp/weyl agreement", algorithm_agreement),
        ("3 expansion triple agreement + five-term form", expansion_agreement),
        ("4 nonnegative generation", nonnegative_generation),
        ("5 counting identities", counting_identities),
        ("6 canonical formula cross-check", canonical_cross_check),
        ("7 Mori/Fano equivalence", mori_fano_equivalence),
        ("8 A2 (1,2,1) ample chamber", a2_ample_chamber),
        ("9 subcone inclusion", subcone_inclusion),
        ("10 LT/boundary round trip", lt_round_trip),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let t = Instant::now();
        match run() {
            Ok(detail) => println!("PASS  criterion {name}: {detail} [{:.2?}]", t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why} [{:.2?}]", t.elapsed());
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 10 acceptance criteria passed");
}
