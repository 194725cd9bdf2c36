//! Acceptance checks, one PASS/FAIL line each.

use std::process::Command;
use std::time::{Duration, Instant};

use gkws::agcode::{build_code, min_weight_exhaustive, pure_gap_bound, DEFAULT_WEIGHT_CAP};
use gkws::curve::{enumerate_points, GkParams};
use gkws::rrspace::{canonical_divisor, DimOracle, Place};
use gkws::wsemi::{
    classify, gamma_closed_form, gamma_from_box, is_pure_gap, lub, pure_gap_family_k,
    pure_gaps_in_box, semigroup_box, single_point_gaps, PoleVector,
};
use gkws::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

struct Suite {
    failed: usize,
}

impl Suite {
    fn run(&mut self, id: u32, title: &str, limit: Duration, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let res = f();
        let took = start.elapsed();
        let res = match res {
            Ok(msg) if took > limit => Err(format!("{msg}; over time limit")),
            other => other,
        };
        let (tag, msg) = match &res {
            Ok(m) => ("PASS", m),
            Err(m) => ("FAIL", m),
        };
        println!(
            "{tag} [{id:>2}] {title} ({:.2}s, limit {}s): {msg}",
            took.as_secs_f64(),
            limit.as_secs()
        );
        if res.is_err() {
            self.failed += 1;
        }
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

fn pv(v: &[u32]) -> PoleVector {
    PoleVector::new(v.to_vec())
}

fn tuples(v: &[&[u32]]) -> Vec<PoleVector> {
    let mut out: Vec<PoleVector> = v.iter().map(|t| pv(t)).collect();
    out.sort();
    out
}

fn gamma_pairs_n2() -> Vec<PoleVector> {
    tuples(&[
        &[1, 19],
        &[2, 11],
        &[3, 3],
        &[4, 13],
        &[5, 5],
        &[7, 7],
        &[10, 10],
        &[11, 2],
        &[13, 4],
        &[19, 1],
    ])
}

fn gamma_triples_n2() -> Vec<PoleVector> {
    tuples(&[
        &[10, 1, 1],
        &[1, 1, 10],
        &[1, 10, 1],
        &[2, 2, 2],
        &[4, 4, 4],
    ])
}

fn cli_json(args: &[&str]) -> Result<serde_json::Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_gkws"))
        .args(args)
        .output()
        .map_err(e)?;
    ensure(
        out.status.success(),
        format!("`{}` exited with {}", args.join(" "), out.status),
    )?;
    serde_json::from_slice(&out.stdout).map_err(e)
}

fn json_tuples(v: &serde_json::Value) -> Vec<PoleVector> {
    let mut out: Vec<PoleVector> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            PoleVector::new(
                t.as_array()
                    .unwrap()
                    .iter()
                    .map(|x| x.as_u64().unwrap() as u32)
                    .collect(),
            )
        })
        .collect();
    out.sort();
    out
}

fn gamma_exact() -> Outcome {
    for (m, expect) in [(1, gamma_pairs_n2()), (2, gamma_triples_n2())] {
        let m_arg = m.to_string();
        let v = cli_json(&["gamma", "--n", "2", "--m", &m_arg])?;
        let got = json_tuples(&v["gamma"]);
        ensure(got == expect, format!("m={m}: got {got:?}"))?;
        ensure(
            v["status"] == "MATCH",
            format!("m={m}: status {}", v["status"]),
        )?;
    }
    Ok("10 pairs and 5 triples, MATCH".into())
}

fn gamma_equivalence() -> Outcome {
    let o = DimOracle::for_n(2).map_err(e)?;
    for m in [1, 2] {
        let hbox = semigroup_box(&o, m, 19).map_err(e)?;
        let from_box = gamma_from_box(&hbox, o.genus()).map_err(e)?;
        let closed = gamma_closed_form(o.params(), m).map_err(e)?;
        ensure(
            from_box == closed,
            format!("m={m}: box {from_box:?} vs closed {closed:?}"),
        )?;
    }
    Ok(format!(
        "m=1 and m=2 identical, {} cached rank profiles",
        o.cached_profiles()
    ))
}

fn point_counts() -> Outcome {
    let mut seen = Vec::new();
    for (n, expect) in [(2, 225), (3, 6076)] {
        let p = GkParams::new(n).map_err(e)?;
        let pts = enumerate_points(&p).map_err(e)?;
        ensure(
            pts.total() == expect,
            format!("n={n}: {} points", pts.total()),
        )?;
        ensure(
            pts.orbit1_len() as u64 == n * n * n + 1,
            format!("n={n}: orbit {}", pts.orbit1_len()),
        )?;
        seen.push(format!("n={n}: {}", pts.total()));
    }
    Ok(seen.join(", "))
}

fn single_gaps() -> Outcome {
    let p2 = GkParams::new(2).map_err(e)?;
    let g2 = single_point_gaps(&p2);
    ensure(
        g2 == vec![1, 2, 3, 4, 5, 7, 10, 11, 13, 19],
        format!("n=2: {g2:?}"),
    )?;
    let p3 = GkParams::new(3).map_err(e)?;
    let g3 = single_point_gaps(&p3);
    ensure(g3.len() == 99, format!("n=3: {} gaps", g3.len()))?;
    // independent check: gaps are the non-jumps of l(k P_inf)
    for p in [p2, p3] {
        let o = DimOracle::new(p.clone());
        let closed = single_point_gaps(&p);
        let mut prev = 1;
        let mut from_dims = Vec::new();
        for k in 1..=2 * p.genus as i64 {
            let d = o.dim(&o.divisor(k, &[]).map_err(e)?).map_err(e)?;
            if d == prev {
                from_dims.push(k as u64);
            }
            prev = d;
        }
        ensure(
            from_dims == closed,
            format!("n={}: dimension jumps disagree", p.n),
        )?;
    }
    Ok("n=2 list exact, n=3 has 99 gaps; both agree with l(k P_inf)".into())
}

fn riemann_roch() -> Outcome {
    let o = DimOracle::for_n(2).map_err(e)?;
    let k = canonical_divisor(o.params());
    ensure(k.degree() == 18 && k.inf == 18, format!("K = {k}"))?;
    ensure(o.dim(&k).map_err(e)? == 10, "l(K) != 10")?;
    let g = o.genus() as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for _ in 0..200 {
        let c: Vec<i64> = (0..3).map(|_| rng.gen_range(-5..=30)).collect();
        let d = o.divisor(c[0], &c[1..]).map_err(e)?;
        let lhs = o.dim(&d).map_err(e)? as i64 - o.dim(&k.sub(&d)).map_err(e)? as i64;
        ensure(lhs == d.degree() + 1 - g, format!("fails for {d}"))?;
    }
    Ok("200 random divisors".into())
}

fn discrepancy_gamma() -> Outcome {
    let o = DimOracle::for_n(2).map_err(e)?;
    let gamma = gamma_pairs_n2();
    let mut hits = 0;
    for a in 1..=19u32 {
        for b in 1..=19u32 {
            let d = o.divisor(a as i64, &[b as i64]).map_err(e)?;
            let disc = o.is_discrepancy(&d, Place::Inf, Place::P(0)).map_err(e)?;
            let in_gamma = gamma.contains(&pv(&[a, b]));
            ensure(
                disc == in_gamma,
                format!("({a},{b}): discrepancy {disc}, in Gamma {in_gamma}"),
            )?;
            hits += disc as usize;
        }
    }
    Ok(format!("{hits} discrepancies in [1,19]^2, all in Gamma"))
}

fn pure_gaps_n2() -> Outcome {
    let o = DimOracle::for_n(2).map_err(e)?;
    let fam_k: Vec<PoleVector> = (2..=o.params().a)
        .map(|k| pure_gap_family_k(o.params(), 1, k))
        .collect::<Result<_, _>>()
        .map_err(e)?;
    for t in [pv(&[11, 1]), pv(&[3, 2])] {
        ensure(
            fam_k.contains(&t),
            format!("{t} not produced by the family"),
        )?;
        ensure(
            is_pure_gap(&o, &t).map_err(e)?,
            format!("{t} not a pure gap"),
        )?;
    }
    let hbox = semigroup_box(&o, 1, 19).map_err(e)?;
    let pure = pure_gaps_in_box(&o, 1, 19).map_err(e)?;
    for t in &pure {
        ensure(
            !hbox.contains(t.entries()),
            format!("{t} is in the semigroup"),
        )?;
    }
    Ok(format!(
        "(11,1), (3,2) pure; {} pure gaps in [1,19]^2, all gaps",
        pure.len()
    ))
}

fn pure_gaps_n3() -> Outcome {
    let o = DimOracle::for_n(3).map_err(e)?;
    let target = pv(&[114, 2, 2, 1]);
    ensure(
        pure_gap_family_k(o.params(), 3, 2).map_err(e)? == target,
        "family value for k = 2 is not (114,2,2,1)",
    )?;
    let mut notes = Vec::new();
    for t in [target.clone(), pv(&[142, 2, 2, 1]), pv(&[155, 1, 1, 1])] {
        let v = classify(&o, &t).map_err(e)?;
        // pure gaps are gaps, and removing any point keeps l(A)
        if v.pure_gap {
            ensure(!v.in_semigroup, format!("{t} pure but in the semigroup"))?;
            let a = t.to_divisor(o.params()).map_err(e)?;
            let la = o.dim(&a).map_err(e)?;
            for i in 0..t.len() {
                let li = o
                    .dim(&a.plus(PoleVector::place(i), -1).map_err(e)?)
                    .map_err(e)?;
                ensure(li == la, format!("{t}: l drops at point {i}"))?;
            }
        }
        notes.push(format!(
            "{t}: in_semigroup={} pure_gap={}",
            v.in_semigroup, v.pure_gap
        ));
    }
    ensure(
        is_pure_gap(&o, &target).map_err(e)?,
        "(114,2,2,1) is not a pure gap",
    )?;
    Ok(notes.join("; "))
}

fn code_n3() -> Outcome {
    let o = DimOracle::for_n(3).map_err(e)?;
    let pts = enumerate_points(o.params()).map_err(e)?;
    let g = o.divisor(296, &[2, 2, 1]).map_err(e)?;
    let (_, s) = build_code(&o, &pts, &g).map_err(e)?;
    let genus = o.genus() as i64;
    ensure(s.length == 6072, format!("length {}", s.length))?;
    ensure(s.k_omega == 5869, format!("k_omega {}", s.k_omega))?;
    let predicted = s.length as i64 - g.degree() + genus - 1;
    ensure(
        s.k_omega as i64 == predicted,
        format!("rank gives {}, prediction {predicted}", s.k_omega),
    )?;
    // deg G - (2g - 2) = 301 - 196
    ensure(
        s.goppa_d_omega == Some(105),
        format!("goppa_d_omega {:?}", s.goppa_d_omega),
    )?;
    let pair_bound = g.degree() - (2 * genus - 2) + 4;
    ensure(
        pair_bound == 109,
        format!("pure-gap bound arithmetic {pair_bound}"),
    )?;
    let alpha = pv(&[142, 2, 2, 1]);
    let beta = pv(&[155, 1, 1, 1]);
    let pair = match pure_gap_bound(&o, &alpha, &beta) {
        Ok((gp, bound)) => {
            ensure(gp == g, format!("pair gives {gp}"))?;
            ensure(bound == 109, format!("pure-gap bound {bound}"))?;
            "pair verified, d_omega >= 109".to_string()
        }
        Err(Error::NotPureGap(t)) => {
            format!("pair rejected by the oracle ({t:?} is not a pure gap), bound 109 not claimed")
        }
        Err(other) => return Err(other.to_string()),
    };
    Ok(format!(
        "length 6072, k_omega 5869 = rank = prediction, Goppa d_omega >= 105; {pair}"
    ))
}

fn lub_closed() -> Outcome {
    let o = DimOracle::for_n(2).map_err(e)?;
    let hbox = semigroup_box(&o, 2, 19).map_err(e)?;
    let members = hbox.members();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0010);
    for _ in 0..500 {
        let u = &members[rng.gen_range(0..members.len())];
        let v = &members[rng.gen_range(0..members.len())];
        let w = lub(&[u.clone(), v.clone()]).map_err(e)?;
        ensure(
            hbox.contains(w.entries()),
            format!("lub({u}, {v}) = {w} not in H"),
        )?;
    }
    Ok(format!("500 pairs from {} members", members.len()))
}

fn exhaustive_distance() -> Outcome {
    let o = DimOracle::for_n(2).map_err(e)?;
    let pts = enumerate_points(o.params()).map_err(e)?;
    let mut notes = Vec::new();
    for n_pole in [11i64, 13, 14] {
        let g = o.divisor(n_pole, &[]).map_err(e)?;
        let (gm, s) = build_code(&o, &pts, &g).map_err(e)?;
        if s.k > 4 {
            notes.push(format!("N={n_pole}: k={} > 4, not in scope", s.k));
            continue;
        }
        let d = min_weight_exhaustive(&gm.matrix, &o.params().field, DEFAULT_WEIGHT_CAP)
            .ok_or(format!("N={n_pole}: q^k above cap"))?;
        let bound = s.length as i64 - n_pole;
        ensure(d as i64 >= bound, format!("N={n_pole}: d={d} < {bound}"))?;
        notes.push(format!("N={n_pole}: k={} d={d} >= {bound}", s.k));
    }
    Ok(notes.join("; "))
}

fn main() {
    let mut suite = Suite { failed: 0 };
    let secs = Duration::from_secs;
    suite.run(1, "Gamma exactness, n=2", secs(1), gamma_exact);
    suite.run(
        2,
        "closed form equals box minimality, n=2",
        secs(300),
        gamma_equivalence,
    );
    suite.run(3, "point counts", secs(120), point_counts);
    suite.run(4, "single-point gaps", secs(60), single_gaps);
    suite.run(
        5,
        "Riemann-Roch on random divisors",
        secs(120),
        riemann_roch,
    );
    suite.run(
        6,
        "discrepancies are exactly Gamma, n=2 m=1",
        secs(60),
        discrepancy_gamma,
    );
    suite.run(7, "pure-gap families, n=2 m=1", secs(60), pure_gaps_n2);
    suite.run(8, "pure-gap verdicts, n=3 m=3", secs(600), pure_gaps_n3);
    suite.run(9, "four-point dual code, n=3", secs(900), code_n3);
    suite.run(10, "lub closure, n=2 m=2", secs(60), lub_closed);
    suite.run(
        11,
        "exhaustive minimum distance, n=2",
        secs(300),
        exhaustive_distance,
    );
    if suite.failed > 0 {
        println!("{} criteria failed", suite.failed);
        std::process::exit(1);
    }
    println!("all criteria passed");
}
