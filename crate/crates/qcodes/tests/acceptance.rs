//! Acceptance suite: runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use qcodes::verify::{self, Check, VerifyArgs};
use qcodes::Session;
use qcodes_core::codes::{build_code, expected_dimension, is_duadic_pair};
use qcodes_core::derived::{classify_type, gray_map, lee_weight, trace_code, TypeII};
use qcodes_core::distance::{macwilliams, min_distance, verify_distance_theorem, DistanceOptions, Method, Theorem};
use qcodes_core::galois::{Embedding, FieldContext, Gf4, MAX_M};
use qcodes_core::weights::{self, verify_partial_theorem, Base};
use qcodes_core::QVec;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_pass(checks: &[Check]) -> Result<usize, String> {
    match checks.iter().find(|c| !c.pass) {
        Some(c) => Err(format!("{}: {}", c.name, serde_json::Value::Object(c.detail.clone()))),
        None => Ok(checks.len()),
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    ensure(start.elapsed() < limit, || {
        format!("took {:?}, limit {:?}", start.elapsed(), limit)
    })
}

fn m2_parameters() -> Outcome {
    let start = Instant::now();
    let ctx = FieldContext::build(2, None).unwrap();
    let opts = DistanceOptions::default();
    let mut seen = Vec::new();
    for (i, expect, dual_expect) in [(0, (9, 3), (6, 6)), (1, (7, 5), (8, 4))] {
        let c = build_code(i, 2, &ctx).unwrap();
        let d = c.dual(&ctx).unwrap();
        for (code, (k, dist)) in [(&c, expect), (&d, dual_expect)] {
            let r = min_distance(code, &opts).unwrap();
            ensure(r.method == Method::Exhaustive, || format!("method {:?}", r.method))?;
            let got = (code.n(), code.k(), r.exact.unwrap() as usize);
            ensure(got == (15, k, dist), || {
                format!("C({i},2) family: got {got:?}, expected [15,{k},{dist}]")
            })?;
            seen.push(format!("[{},{},{}]", got.0, got.1, got.2));
        }
    }
    within(start, Duration::from_secs(30))?;
    Ok(seen.join(" "))
}

fn lcd() -> Outcome {
    let s = Session::default();
    let n = all_pass(&verify::lcd(&s, &[2, 4]).map_err(|e| e.to_string())?)?;
    Ok(format!("{n} codes LCD, hull agrees with C ∩ C^⊥ at m=2"))
}

fn duadic() -> Outcome {
    for m in 1..=5 {
        let ctx = FieldContext::build(m, None).unwrap();
        let (c0, c1) = (build_code(0, m, &ctx).unwrap(), build_code(1, m, &ctx).unwrap());
        let got = is_duadic_pair(&c0, &c1, -1);
        ensure(got == (m % 2 == 1), || format!("m={m}: duadic = {got}"))?;
    }
    Ok("true for m=1,3,5; false for m=2,4".into())
}

fn dimensions() -> Outcome {
    let start = Instant::now();
    for m in 1..=6 {
        let ctx = FieldContext::build(m, None).unwrap();
        for i in 0..2 {
            let c = build_code(i, m, &ctx).unwrap();
            let deg = c.generator().degree().unwrap_or(0) as u64;
            let k = c.n() as u64 - deg;
            ensure(k == expected_dimension(i, m), || {
                format!("C({i},{m}): k = {k}, expected {}", expected_dimension(i, m))
            })?;
        }
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!("m=1..6 in {:.2?}", start.elapsed()))
}

fn bch_certification() -> Outcome {
    let start = Instant::now();
    let cases = [
        (5, Theorem::OddCodes, 17),
        (7, Theorem::OddCodes, 17),
        (10, Theorem::EvenC0, 65),
        (12, Theorem::EvenC0, 257),
    ];
    let mut seen = Vec::new();
    for (m, th, claimed) in cases {
        let c = verify_distance_theorem(m, th).map_err(|e| e.to_string())?;
        ensure(c.claimed_lower == claimed, || {
            format!("m={m}: claimed {}", c.claimed_lower)
        })?;
        ensure(c.certified_lower >= claimed, || {
            format!("m={m}: certified {} < {claimed}", c.certified_lower)
        })?;
        seen.push(format!("m={m}: {} >= {claimed}", c.certified_lower));
    }
    within(start, Duration::from_secs(60))?;
    Ok(seen.join(", "))
}

fn trace_codes() -> Outcome {
    let start = Instant::now();
    let ctx = FieldContext::build(3, None).unwrap();
    let opts = DistanceOptions::default();
    for i in 0..2 {
        let t = trace_code(&build_code(i, 3, &ctx).unwrap());
        ensure(t.n() - t.k() == 15, || format!("dual dimension {}", t.n() - t.k()))?;
        let r = min_distance(&t, &opts).unwrap();
        ensure(r.method == Method::ViaDual, || format!("method {:?}", r.method))?;
        ensure((t.n(), t.k(), r.exact) == (63, 48, Some(5)), || {
            format!("trace C({i},3): [{}, {}, {:?}]", t.n(), t.k(), r.exact)
        })?;
        let e = t.extend();
        let re = min_distance(&e, &opts).unwrap();
        ensure((e.n(), e.k(), re.exact) == (64, 48, Some(6)), || {
            format!("extended: [{}, {}, {:?}]", e.n(), e.k(), re.exact)
        })?;
    }
    within(start, Duration::from_secs(60))?;
    Ok("[63,48,5] and [64,48,6] for i=0,1".into())
}

fn type_ii() -> Outcome {
    for i in 0..2 {
        let ctx = FieldContext::build(1, None).unwrap();
        let v = classify_type(&build_code(i, 1, &ctx).unwrap().extend(), 1 << 22, 10_000, 0xC0DE);
        ensure(v.self_dual && v.type_ii == TypeII::Proven, || {
            format!("m=1 i={i}: {v:?}")
        })?;
        let ctx = FieldContext::build(3, None).unwrap();
        let e = build_code(i, 3, &ctx).unwrap().extend();
        ensure(e.is_self_orthogonal() && 2 * e.k() == e.n(), || {
            format!("m=3 i={i}: not self-dual")
        })?;
        let v = classify_type(&e, 1 << 22, 10_000, 0xC0DE);
        ensure(
            v.self_dual && v.type_ii == TypeII::SampledConsistent && v.checked == 10_000,
            || format!("m=3 i={i}: {v:?}"),
        )?;
    }
    Ok("m=1 proven; m=3 self-dual exact, Type II sampled_consistent (10^4 samples, 0 violations)".into())
}

fn gcd_sweep() -> Outcome {
    let checks = verify::gcd_sweep(&VerifyArgs::default()).map_err(|e| e.to_string())?;
    all_pass(&checks)?;
    let cases = checks[0].detail["cases"].as_u64().unwrap();
    ensure(cases > 0, || "no cases".into())?;
    Ok(format!("{cases} cases, 0 mismatches"))
}

fn coupling_sweep() -> Outcome {
    let start = Instant::now();
    all_pass(&[verify::coupling_sweep(1_000_000)])?;
    within(start, Duration::from_secs(10))?;
    Ok(format!("a in [1, 10^6] in {:.2?}", start.elapsed()))
}

fn partial_theorem() -> Outcome {
    let start = Instant::now();
    let c = verify_partial_theorem(30).map_err(|e| e.to_string())?;
    within(start, Duration::from_secs(1))?;
    let failing: Vec<u64> = c.witnesses.iter().map(|w| w.0).collect();
    ensure(
        c.coprime && c.contained_t40 && c.contained_t21 && c.contained_2av_t41,
        || {
            format!(
                "containments (T4(0), T2(1), 2av in T4(1)) = ({}, {}, {}); failing a = {failing:?}",
                c.contained_t40, c.contained_t21, c.contained_2av_t41
            )
        },
    )?;
    Ok("all three containments hold for a in [1, 16]".into())
}

fn structural() -> Outcome {
    let s = Session::default();
    let ms = [1, 2, 3, 4];
    let a = all_pass(&verify::dual_identities(&s, &ms).map_err(|e| e.to_string())?)?;
    let b = all_pass(&verify::delsarte(&s, &ms).map_err(|e| e.to_string())?)?;
    // MacWilliams round trip on the extended code of C(0,1) as well
    let ctx = FieldContext::build(1, None).unwrap();
    let e = build_code(0, 1, &ctx).unwrap().extend();
    let wd = qcodes_core::distance::weight_distribution(&e, 1 << 22).unwrap();
    ensure(macwilliams(&wd, 2).unwrap() == wd, || {
        "self-dual code is not MacWilliams-invariant".into()
    })?;
    Ok(format!("{} checks for m=1..4", a + b + 1))
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0DE);
    for _ in 0..100_000 {
        let n = (rng.next_u32() % 100) as usize;
        let v = QVec::from_symbols(&(0..n).map(|_| Gf4::from_bits(rng.next_u32() as u8)).collect::<Vec<_>>());
        ensure(gray_map(&v).weight() == lee_weight(&v), || {
            format!("isometry fails on {:?}", v.symbols())
        })?;
    }
    for m in 1..=MAX_M {
        for emb in [Embedding::Standard, Embedding::Conjugate] {
            let ctx = FieldContext::build(m, None).unwrap().with_embedding(emb);
            for a in Gf4::ALL {
                for b in Gf4::ALL {
                    ensure(ctx.embed(a * b) == ctx.mul(ctx.embed(a), ctx.embed(b)), || {
                        format!("embedding m={m}")
                    })?;
                    ensure(ctx.embed(a + b) == ctx.add(ctx.embed(a), ctx.embed(b)), || {
                        format!("embedding m={m}")
                    })?;
                }
            }
            for _ in 0..1000 {
                let mask = (1u32 << (2 * m)) - 1;
                let x = ctx.from_bits(rng.next_u32() & mask);
                let y = ctx.from_bits(rng.next_u32() & mask);
                let z = ctx.from_bits(rng.next_u32() & mask);
                ensure(
                    ctx.mul(x, ctx.add(y, z)) == ctx.add(ctx.mul(x, y), ctx.mul(x, z)),
                    || format!("distributivity m={m}"),
                )?;
                ensure(
                    x.is_zero() || ctx.mul(x, ctx.inv(x).unwrap()) == qcodes_core::Ext::ONE,
                    || format!("inverse m={m}"),
                )?;
            }
        }
        let n = weights::code_length(m);
        let t0 = weights::defining_set(0, m, Base::Four).unwrap();
        let t1 = weights::defining_set(1, m, Base::Four).unwrap();
        ensure(t0.members().iter().all(|&x| t0.contains(4 * x % n)), || {
            format!("closure m={m}")
        })?;
        let neg_ok = if m % 2 == 1 {
            t0.negate() == t1
        } else {
            t0.negate() == t0 && t1.negate() == t1
        };
        ensure(neg_ok, || format!("negation law m={m}"))?;
        ensure(
            t0.union(&t1).len() as u64 == n - 1 && t0.intersection(&t1).is_empty(),
            || format!("partition m={m}"),
        )?;
    }
    Ok("Gray isometry on 10^5 vectors; field, embedding and defining-set laws for m <= 8".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("m=2 exact parameters", m2_parameters),
        ("LCD for m=2,4", lcd),
        ("duadic pairs", duadic),
        ("dimensions m=1..6", dimensions),
        ("BCH certification", bch_certification),
        ("trace codes at m=3", trace_codes),
        ("self-dual / Type II", type_ii),
        ("gcd sweep", gcd_sweep),
        ("digit-weight coupling sweep", coupling_sweep),
        ("partial theorem at m=30", partial_theorem),
        ("structural identities m=1..4", structural),
        ("property suites", property_suites),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (idx, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({elapsed:.2?}): {detail}", idx + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({elapsed:.2?}): {detail}", idx + 1);
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
