//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Set `SKEWCLEAN_LONG=1` to sweep all 16⁶ matrices of
//! `T_3(Z_4[C2], aug)` instead of a fixed-seed sample.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use skewclean::operators::{lr_map, solve_nilpotent};
use skewclean::ring::ring_from_spec;
use skewclean::theorems::{
    corner_check, sweep_strongly_clean, verify_t2_criterion, verify_t2_very_clean, SweepMode, SweepPlan,
    VerifyConfig,
};
use skewclean::{Elem, Endomorphism, SkewTriRing};

type Outcome = Result<String, String>;

const SEED: u64 = 0xacce_9700;

const T2_RINGS: [(&str, &str); 4] =
    [("zmod:4", "id"), ("zmod:8", "id"), ("dual:zmod:4", "negx"), ("quot:zmod:3;x^2+x+1", "id")];

const DIFFERENTIAL_RINGS: [(&str, &str); 7] = [
    ("zmod:2", "id"),
    ("zmod:4", "id"),
    ("zmod:5", "id"),
    ("zmod:8", "id"),
    ("dual:zmod:4", "negx"),
    ("groupring:zmod:4;C2", "aug"),
    ("quot:zmod:3;x^2+x+1", "id"),
];

fn sigma(ring: &str, sigma: &str) -> Result<Endomorphism, String> {
    let r = Arc::new(ring_from_spec(ring).map_err(|e| e.to_string())?);
    Endomorphism::from_spec(&r, sigma).map_err(|e| e.to_string())
}

fn tri(ring: &str, s: &str, n: usize) -> Result<SkewTriRing, String> {
    SkewTriRing::new(sigma(ring, s)?, n).map_err(|e| e.to_string())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn t2_biconditional() -> Outcome {
    let mut summary = Vec::new();
    for (ring, s) in T2_RINGS {
        let sigma = sigma(ring, s)?;
        let reports = verify_t2_criterion(&sigma, VerifyConfig::default()).map_err(|e| e.to_string())?;
        for id in ["thm2.1", "thm2.1-condition", "thm2.1-strongly-clean"] {
            let r = reports.iter().find(|r| r.claim_id == id).ok_or(format!("{ring}: missing {id}"))?;
            ensure(r.holds(), || format!("{ring}: {id} is {:?}, witness {:?}", r.status, r.witness))?;
        }
        let sc = reports.iter().find(|r| r.claim_id == "thm2.1-strongly-clean").unwrap();
        let order = sigma.ring().order() as u64;
        ensure(sc.mode == Some(SweepMode::Exhaustive) && sc.checked == order.pow(3), || {
            format!("{ring}: swept {} of {} matrices", sc.checked, order.pow(3))
        })?;
        summary.push(format!("{ring}: {}", sc.checked));
    }
    Ok(summary.join(", "))
}

fn t3_constructive() -> Outcome {
    let mut summary = Vec::new();
    for (ring, expected) in [("zmod:4", 4096u128), ("quot:zmod:3;x^2+x+1", 531_441)] {
        let t = tri(ring, "id", 3)?;
        ensure(t.matrix_count() == expected, || format!("{ring}: {} matrices", t.matrix_count()))?;
        let bad = (0..expected as u64).into_par_iter().find_map_first(|i| {
            let a = t.matrix_at(i as u128);
            match t.decompose_t3(&a) {
                Ok(Some(d)) if t.checklist(&a, &d).all() => None,
                other => Some(format!("{ring}: {a:?} -> {other:?}")),
            }
        });
        if let Some(why) = bad {
            return Err(why);
        }
        summary.push(format!("{ring}: {expected}"));
    }
    Ok(summary.join(", "))
}

fn group_ring_example() -> Outcome {
    let sigma = sigma("groupring:zmod:4;C2", "aug")?;
    let ring = sigma.ring();
    let an = ring.analysis();
    ensure(an.is_local, || "not local".into())?;
    ensure(an.radical.len() == 8, || format!("|J| = {}", an.radical.len()))?;
    ensure(!an.one_is_sum_of_two_units, || "1 is a sum of two units".into())?;
    ensure(sigma.power(2) == sigma, || "σ² ≠ σ".into())?;

    let t2 = SkewTriRing::new(sigma.clone(), 2).map_err(|e| e.to_string())?;
    let plan = SweepPlan { limit: 1 << 24, sample_size: 10_000, seed: SEED };
    let out = sweep_strongly_clean(&t2, plan).map_err(|e| e.to_string())?;
    ensure(out.mode == SweepMode::Exhaustive && out.checked == 4096, || format!("T_2 swept {}", out.checked))?;
    ensure(out.failure.is_none(), || format!("T_2: {:?}", out.failure))?;

    let long = std::env::var("SKEWCLEAN_LONG").is_ok_and(|v| v == "1");
    let t3 = SkewTriRing::new(sigma, 3).map_err(|e| e.to_string())?;
    let plan = SweepPlan { limit: if long { 1 << 24 } else { 0 }, ..plan };
    let start = Instant::now();
    let out = sweep_strongly_clean(&t3, plan).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    ensure(out.failure.is_none(), || format!("T_3: {:?}", out.failure))?;
    if long {
        ensure(out.checked == 1 << 24, || format!("T_3 swept {}", out.checked))?;
    } else {
        ensure(out.checked >= 10_000, || format!("T_3 sampled {}", out.checked))?;
        ensure(took < Duration::from_secs(30), || format!("T_3 sample took {took:?}"))?;
    }
    Ok(format!("T_2 4096 exhaustive, T_3 {} {:?} in {took:.1?}", out.checked, out.mode))
}

fn series_solver() -> Outcome {
    let ring = ring_from_spec("zmod:8").map_err(|e| e.to_string())?;
    let an = ring.analysis();
    let mut count = 0;
    for &a in &an.units {
        for &b in &an.radical {
            let map = lr_map(&ring, a, b);
            for v in ring.elements() {
                let x = solve_nilpotent(&ring, a, b, v).map_err(|e| e.to_string())?;
                ensure(map.apply(x) == v, || format!("a={a} b={b} v={v}: x={x}"))?;
                ensure(ring.elements().any(|y| map.apply(y) == v), || format!("no brute-force solution for {v}"))?;
                count += 1;
            }
        }
    }
    ensure(count == 128, || format!("{count} triples"))?;
    Ok(format!("{count} triples"))
}

fn very_clean() -> Outcome {
    let mut summary = Vec::new();
    for (ring, expected) in [("zmod:5", 125), ("zmod:4", 64), ("zmod:2", 8)] {
        let r = verify_t2_very_clean(&sigma(ring, "id")?, VerifyConfig::default()).map_err(|e| e.to_string())?;
        ensure(r.holds(), || format!("{ring}: {:?} {:?}", r.status, r.witness))?;
        ensure(r.checked == expected && r.mode == Some(SweepMode::Exhaustive), || {
            format!("{ring}: {} matrices", r.checked)
        })?;
        summary.push(format!("{ring}: {} ({})", r.checked, r.reason.unwrap_or_default()));
    }
    Ok(summary.join(", "))
}

fn differential() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut total = 0;
    for (ring, s) in DIFFERENTIAL_RINGS {
        let t = tri(ring, s, 2)?;
        for _ in 0..1000 {
            let a = t.matrix_at(rng.gen_range(0..t.matrix_count()));
            let constructive = t.decompose_t2(&a).map_err(|e| e.to_string())?;
            let brute = t.brute_force_strongly_clean(&a).map_err(|e| e.to_string())?;
            ensure(constructive.is_some() == brute.is_some(), || format!("{ring}: disagreement on {a}"))?;
            for d in constructive.iter().chain(brute.iter()) {
                ensure(t.checklist(&a, d).all(), || format!("{ring}: {d:?} fails checks for {a}"))?;
            }
            total += 1;
        }
    }
    Ok(format!("{total} matrices over {} rings", DIFFERENTIAL_RINGS.len()))
}

fn finite_maps() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut onto = 0;
    for (ring, _) in DIFFERENTIAL_RINGS {
        let r = ring_from_spec(ring).map_err(|e| e.to_string())?;
        let order = r.order() as u32;
        for _ in 0..100 {
            let (a, b) = (Elem(rng.gen_range(0..order)), Elem(rng.gen_range(0..order)));
            let map = lr_map(&r, a, b);
            let full = map.image_size() == r.order();
            ensure(map.is_surjective() == full && map.is_injective() == full, || {
                format!("{ring}: a={a} b={b} disagree")
            })?;
            onto += full as u32;
        }
    }
    Ok(format!("{} pairs, {onto} bijective", 100 * DIFFERENTIAL_RINGS.len()))
}

fn corner_replay() -> Outcome {
    let mut summary = Vec::new();
    for (ring, s) in T2_RINGS {
        let t = tri(ring, s, 3)?;
        let r = t.ring();
        let an = r.analysis();
        let mut triples = Vec::new();
        for &a in &an.one_plus_radical(r) {
            for &b in &an.radical {
                for v in r.elements() {
                    triples.push((a, b, v));
                }
            }
        }
        let bad = triples.par_iter().find_map_first(|&(a, b, v)| {
            let m = t.matrix(vec![b, Elem::ZERO, v, b, Elem::ZERO, a]).ok()?;
            corner_check(&t, &m).err().map(|why| format!("{ring}: {m:?}: {why}"))
        });
        if let Some(why) = bad {
            return Err(why);
        }
        summary.push(format!("{ring}: {}", triples.len()));
    }
    Ok(summary.join(", "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, u64); 8] = [
        ("T_2 strongly clean iff surjectivity, exhaustive on four rings", t2_biconditional, 5),
        ("T_3 constructive decomposition, 4096 + 531441 matrices", t3_constructive, 60),
        ("Z_4[C2] with augmentation: local, |J| = 8, T_2 and T_3 sweeps", group_ring_example, 0),
        ("series solver on zmod:8, 128 triples", series_solver, 1),
        ("T_2 very clean iff 2 unit or strongly clean", very_clean, 5),
        ("decompose_t2 vs brute force on 1000 random matrices per ring", differential, 10),
        ("surjective = injective = full image on 100 random maps per ring", finite_maps, 1),
        ("corner matrices decompose with the predicted idempotent", corner_replay, 10),
    ];
    let long = std::env::var("SKEWCLEAN_LONG").is_ok_and(|v| v == "1");
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        // the group ring criterion bounds only its sampled T_3 run, checked inside
        let outcome = match outcome {
            Ok(s) if limit > 0 && took > Duration::from_secs(limit) => Err(format!("{s}; took {took:.1?}, limit {limit}s")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS [{}] {name}: {detail} ({took:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {name}: {why} ({took:.2?})", i + 1);
            }
        }
    }
    if long {
        println!("(long mode: full T_3 sweep over Z_4[C2])");
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
