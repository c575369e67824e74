//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Runs without the libtest harness so the report prints in order and
//! unfiltered under `cargo test`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use banddet::closed_form::{a_det, b_det, b_identity, c_recurrence_check, c_val, m_det};
use banddet::oracle::{det_banded, det_bareiss, det_cofactor};
use banddet::verify::{
    default_a_samples, default_samples, default_threads, mismatches, verify_lemmas, verify_range, Oracle,
    ParamSample, VerifyConfig,
};
use banddet::matrix::MIN_BORDERED_N;
use banddet::{build_bordered, build_dense, ExactFamily, ExactScalar, FamilyTag, MatrixFamily};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = Result<String, String>;
type Criterion = fn() -> Check;

fn q(s: &str) -> ExactScalar {
    s.parse().unwrap()
}

fn int(v: i64) -> ExactScalar {
    ExactScalar::from_integer(v)
}

fn within(elapsed: Duration, limit_s: u64, detail: String) -> Check {
    let secs = elapsed.as_secs_f64();
    if secs < limit_s as f64 {
        Ok(format!("{detail}; {secs:.2}s (< {limit_s}s)"))
    } else {
        Err(format!("{detail}; {secs:.2}s exceeds {limit_s}s"))
    }
}

/// Closed form, banded elimination and the frozen cycle must all agree.
fn theorem_sweep(family: ExactFamily, cycle: [i64; 4], closed: fn(i64) -> banddet::Result<ExactScalar>) -> Check {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 5..=2000usize {
        let expected = int(cycle[n % 4]);
        let formula = closed(n as i64).map_err(|e| e.to_string())?;
        let oracle = if n >= MIN_BORDERED_N {
            det_banded(&build_bordered(&family, n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?.0
        } else {
            det_bareiss(&build_dense(&family, n).map_err(|e| e.to_string())?).0
        };
        if formula != expected || oracle != expected {
            bad.push(n);
        }
    }
    if !bad.is_empty() {
        return Err(format!("mismatch at n={bad:?}"));
    }
    within(start.elapsed(), 30, "n=5..2000 exact (n=5 by Bareiss, below the bordered minimum), single thread".into())
}

fn criterion_1() -> Check {
    theorem_sweep(ExactFamily::theorem_a(), [1, 2, -1, 0], a_det)
}

fn criterion_2() -> Check {
    theorem_sweep(ExactFamily::theorem_m(), [0, 2, 3, 1], m_det)
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let pairs = [("0", "0"), ("2", "-3"), ("1/2", "7/5"), ("-1", "4")];
    let mut count = 0;
    for (a, b) in pairs {
        let mut cfg = VerifyConfig::new(FamilyTag::B, 5, 200);
        cfg.samples = vec![ParamSample::ab(q(a), q(b))];
        cfg.oracles = vec![Oracle::Bareiss];
        cfg.threads = 1;
        let reports = verify_range(&cfg).map_err(|e| e.to_string())?;
        let bad = mismatches(&reports);
        if !bad.is_empty() {
            return Err(format!("(a,b)=({a},{b}) mismatch at n={bad:?}"));
        }
        count += reports.len();
    }
    within(start.elapsed(), 60, format!("{count} matrices vs Bareiss"))
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let threads = default_threads();
    let mut cfg = VerifyConfig::new(FamilyTag::B, 5, 10_000);
    cfg.samples = vec![ParamSample::ab(int(0), int(1)), ParamSample::ab(int(1), int(0))];
    cfg.oracles = vec![Oracle::Banded];
    cfg.threads = threads;
    let reports = verify_range(&cfg).map_err(|e| e.to_string())?;
    let bad = mismatches(&reports);
    if !bad.is_empty() {
        return Err(format!("{} mismatches, first n={:?}", bad.len(), &bad[..bad.len().min(10)]));
    }
    within(start.elapsed(), 120, format!("{} matrices, 0 mismatches, {threads} thread(s)", reports.len()))
}

fn criterion_5() -> Check {
    let reports = verify_lemmas(4, 40, &default_a_samples(), default_threads()).map_err(|e| e.to_string())?;
    let mut counts = Vec::new();
    for tag in FamilyTag::LEMMAS {
        let mine: Vec<_> = reports.iter().filter(|r| r.family.tag() == tag).collect();
        let bad: Vec<usize> = mine.iter().filter(|r| !r.agree).map(|r| r.n).collect();
        if !bad.is_empty() {
            let note = if tag == FamilyTag::L { " (re-examine the L builder reading)" } else { "" };
            return Err(format!("{tag} mismatch at n={bad:?}{note}"));
        }
        counts.push(format!("{tag} {}", mine.len()));
    }
    let span = |t: FamilyTag| reports.iter().filter(move |r| r.family.tag() == t).map(|r| r.n);
    let (k_lo, l_lo) = (span(FamilyTag::K).min(), span(FamilyTag::L).min());
    if k_lo != Some(5) || l_lo != Some(6) || span(FamilyTag::L).max() != Some(40) {
        return Err(format!("unexpected coverage: K from {k_lo:?}, L from {l_lo:?}"));
    }
    Ok(counts.join(", "))
}

fn random_rational(rng: &mut StdRng) -> ExactScalar {
    let num = rng.gen_range(-50i64..=50);
    let den = rng.gen_range(1i64..=20);
    ExactScalar::new(num, den).unwrap()
}

fn criterion_6() -> Check {
    for n in 1..=10_000i64 {
        let c: ExactScalar = c_val(n).map_err(|e| e.to_string())?;
        let c4: ExactScalar = c_val(n + 4).map_err(|e| e.to_string())?;
        if c != c4 {
            return Err(format!("C period fails at n={n}"));
        }
        if n >= 4 && !c_recurrence_check(n).map_err(|e| e.to_string())? {
            return Err(format!("C recurrence fails at n={n}"));
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    for n in 7..=500i64 {
        let (a, b) = (random_rational(&mut rng), random_rational(&mut rng));
        let table = b_det(n, &a, &b).map_err(|e| e.to_string())?;
        let ident = b_identity(n, &a, &b).map_err(|e| e.to_string())?;
        if table != ident {
            return Err(format!("identity differs at n={n}, a={a}, b={b}: {table} vs {ident}"));
        }
    }
    for n in 5..=500i64 {
        let ok = b_det(n, &int(0), &int(1)).ok() == a_det(n).ok() && b_det(n, &int(1), &int(0)).ok() == m_det(n).ok();
        if !ok {
            return Err(format!("specialization fails at n={n}"));
        }
    }
    Ok("period+recurrence to 10000, identity on 7..500 (seeded), specializations on 5..500".into())
}

fn families_for(tag: FamilyTag) -> Vec<ExactFamily> {
    match (tag.takes_a(), tag.takes_b()) {
        (true, true) => default_samples()
            .into_iter()
            .chain([ParamSample::ab(q("-1"), q("4"))])
            .map(|s| MatrixFamily::from_parts(tag, s.a, s.b).unwrap())
            .collect(),
        (true, false) => default_a_samples()
            .into_iter()
            .map(|a| MatrixFamily::from_parts(tag, Some(a), None).unwrap())
            .collect(),
        _ => vec![MatrixFamily::from_parts(tag, None, None).unwrap()],
    }
}

fn criterion_7() -> Check {
    let mut small = 0;
    for tag in FamilyTag::ALL {
        for family in families_for(tag) {
            for n in tag.min_n()..=9 {
                let m = build_dense(&family, n).map_err(|e| e.to_string())?;
                let cof = det_cofactor(&m).map_err(|e| e.to_string())?;
                let (bar, _) = det_bareiss(&m);
                if cof != bar {
                    return Err(format!("cofactor {cof} vs Bareiss {bar} for {family} n={n}"));
                }
                small += 1;
            }
        }
    }
    let mut large = 0;
    for tag in [FamilyTag::B, FamilyTag::C, FamilyTag::T, FamilyTag::P] {
        for family in families_for(tag) {
            for n in 6..=300 {
                let (bar, _) = det_bareiss(&build_dense(&family, n).map_err(|e| e.to_string())?);
                let (band, _) = det_banded(&build_bordered(&family, n).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                if bar != band {
                    return Err(format!("Bareiss {bar} vs banded {band} for {family} n={n}"));
                }
                large += 1;
            }
        }
    }
    Ok(format!("{small} cofactor/Bareiss pairs (n<=9), {large} Bareiss/banded pairs (6..300)"))
}

fn criterion_8() -> Check {
    let c: ExactFamily = MatrixFamily::C;
    let (band, band_trace) = det_banded(&build_bordered(&c, 10).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let (bar, bar_trace) = det_bareiss(&build_dense(&c, 10).map_err(|e| e.to_string())?);
    if band != int(0) || bar != int(0) {
        return Err(format!("C_10 = {band} (banded), {bar} (Bareiss); expected 0"));
    }
    if band_trace.swaps() == 0 || bar_trace.swaps() == 0 {
        return Err(format!("no row swap recorded (banded {}, Bareiss {})", band_trace.swaps(), bar_trace.swaps()));
    }
    Ok(format!("det 0; swaps: banded {}, Bareiss {}", band_trace.swaps(), bar_trace.swaps()))
}

fn criterion_9() -> Check {
    let mut cfg = VerifyConfig::new(FamilyTag::B, 5, 10_000);
    cfg.samples = vec![ParamSample::ab(int(0), int(1)), ParamSample::ab(int(1), int(0))];
    cfg.oracles = vec![];
    cfg.float = true;
    cfg.threads = default_threads();
    let reports = verify_range(&cfg).map_err(|e| e.to_string())?;
    let mut worst = 0.0f64;
    let mut over = Vec::new();
    let mut unrounded = Vec::new();
    for r in &reports {
        let Some(f) = r.float else {
            return Err(format!("no float value at n={}", r.n));
        };
        worst = worst.max(f.abs_error);
        if f.abs_error.is_nan() || f.abs_error >= 1e-6 {
            over.push(r.n);
        }
        if !f.rounds_to(&r.formula_value) {
            unrounded.push(r.n);
        }
    }
    if !unrounded.is_empty() {
        return Err(format!("float rounds away from exact at n={unrounded:?}"));
    }
    // Excess error is reported, not asserted; rounding agreement is the criterion.
    Ok(format!("{} floats, max abs error {worst:e}, {} above 1e-6", reports.len(), over.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 9] = [
        ("theorem A cycle vs banded", criterion_1),
        ("theorem M cycle vs banded", criterion_2),
        ("general corners vs Bareiss", criterion_3),
        ("full sweep to 10000", criterion_4),
        ("lemma families", criterion_5),
        ("identities", criterion_6),
        ("oracle tower", criterion_7),
        ("pivoting regression", criterion_8),
        ("float path", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
