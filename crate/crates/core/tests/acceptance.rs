//! Acceptance criteria. Each check prints one PASS/FAIL line; the process
//! exits non-zero if any fails.

mod common;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::panic;
use std::process::ExitCode;
use std::time::Instant;

use statrs::distribution::{ChiSquared, ContinuousCDF};
use weylcode::experiments;
use weylcode::graph::{graph_transfer, path_to_tableau, tableau_to_path, YoungGraph};
use weylcode::rng::{tagged_substream, uniform_prefix};
use weylcode::rsk::{self, StandardTableau, Tableau};
use weylcode::shape::partitions;
use weylcode::skeleton::{translation, tree_parent, weyl_index};
use weylcode::triangular::{
    encode_prefix, estimate_first_coord, ranks_to_tricode, reconstruct_prefix, special_positions,
    transfer, tricode_to_ranks,
};
use weylcode::{RankVector, RealPrefix, TriCode};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn code_bijection() -> Outcome {
    let mut total = 0usize;
    for n in 1..=8 {
        let perms = common::permutations(n);
        let mut images = HashSet::new();
        for perm in &perms {
            let k = RankVector::new(perm.clone()).map_err(|e| e.to_string())?;
            let t = ranks_to_tricode(&k);
            check(
                t.as_slice() == common::codes(&common::reals_of(perm)),
                || format!("code of {perm:?} differs from the counting oracle"),
            )?;
            check(tricode_to_ranks(&t) == k, || {
                format!("ranks -> code -> ranks fails at {perm:?}")
            })?;
            images.insert(t);
        }
        let codes = common::triangular_codes(n);
        check(codes.len() as u128 == common::factorial(n), || {
            format!("{} codes at n = {n}", codes.len())
        })?;
        for c in &codes {
            let t = TriCode::new(c.clone()).map_err(|e| e.to_string())?;
            check(ranks_to_tricode(&tricode_to_ranks(&t)) == t, || {
                format!("code -> ranks -> code fails at {c:?}")
            })?;
            check(images.contains(&t), || format!("code {c:?} is not hit"))?;
        }
        total += perms.len() + codes.len();
    }
    Ok(format!("{total} round trips over n = 1..8"))
}

/// Intertwining and the displayed identity on one prefix.
fn intertwines(x: &RealPrefix) -> Result<(), String> {
    let t = encode_prefix(x);
    let shifted = x.shift().map_err(|e| e.to_string())?;
    let t_shift = encode_prefix(&shifted);
    check(
        t_shift.as_slice() == common::codes(shifted.values()),
        || "code of the shifted prefix differs from the oracle".into(),
    )?;
    let tp = transfer(&t).map_err(|e| e.to_string())?;
    check(tp == t_shift, || {
        format!(
            "transfer {:?} != code of shift {:?}",
            tp.as_slice(),
            t_shift.as_slice()
        )
    })?;
    Ok(())
}

fn identity_holds(x: &RealPrefix) -> Result<usize, String> {
    let t = encode_prefix(x);
    let tp = transfer(&t).map_err(|e| e.to_string())?;
    let (mask, d) = common::special(x.values());
    let profile = special_positions(&t);
    check(profile.mask == mask && profile.d == d, || {
        "special positions differ from the oracle".into()
    })?;
    let (t, tp) = (t.as_slice(), tp.as_slice());
    for i in 0..tp.len() {
        // 0-based: t[i + 1] - t'[i] = 1 - (d[i + 1] - d[i])
        let lhs = t[i + 1] as i64 - tp[i] as i64;
        let rhs = 1 - (d[i + 1] as i64 - d[i] as i64);
        check(lhs == rhs, || {
            format!("identity fails at position {}", i + 1)
        })?;
    }
    Ok(tp.len())
}

fn criterion_cases() -> Vec<RealPrefix> {
    let mut cases: Vec<RealPrefix> = (0..1_000)
        .map(|trial| uniform_prefix(200, &mut tagged_substream(0xACCE, 2, trial)))
        .collect();
    for n in 2..=8 {
        for perm in common::permutations(n) {
            cases.push(RealPrefix::new(common::reals_of(&perm)).unwrap());
        }
    }
    cases
}

fn intertwining() -> Outcome {
    let cases = criterion_cases();
    for x in &cases {
        intertwines(x)?;
    }
    Ok(format!(
        "{} prefixes (1000 random of length 200, all permutations n = 2..8)",
        cases.len()
    ))
}

fn displayed_identity() -> Outcome {
    let mut positions = 0;
    for x in &criterion_cases() {
        positions += identity_holds(x)?;
    }
    Ok(format!("{positions} positions checked"))
}

fn tree_translation() -> Outcome {
    let mut count = 0;
    for n in 2..=8 {
        for perm in common::permutations(n) {
            let x = common::reals_of(&perm);
            let k = RankVector::new(perm.clone()).unwrap();
            check(
                weyl_index(&RealPrefix::new(x.clone()).unwrap()) == k,
                || "weyl index".into(),
            )?;
            let r = translation(&k).map_err(|e| e.to_string())?;
            check(r.as_slice() == common::ranks(&x[1..]).as_slice(), || {
                format!("translation of {perm:?} is {:?}", r.as_slice())
            })?;
            if n >= 3 {
                let a = tree_parent(&r).map_err(|e| e.to_string())?;
                let b = translation(&tree_parent(&k).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                check(a == b, || format!("removals do not commute at {perm:?}"))?;
                check(
                    a.as_slice() == common::ranks(&x[1..n - 1]).as_slice(),
                    || format!("double removal of {perm:?} differs from the oracle"),
                )?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} permutations, n = 2..8"))
}

fn first_coordinate_limit() -> Outcome {
    let (n, trials) = (100_000, 100);
    let mut good = 0;
    let mut worst = 0.0f64;
    for trial in 0..trials {
        let x = uniform_prefix(n, &mut tagged_substream(0xACCE, 5, trial));
        let err = (estimate_first_coord(&encode_prefix(&x)).unwrap() - x.values()[0]).abs();
        worst = worst.max(err);
        good += (err < 0.01) as usize;
    }
    check(good >= 95, || format!("only {good}/100 trials within 0.01"))?;
    Ok(format!(
        "{good}/100 trials with |d_N/N - x_1| < 0.01 at N = 1e5 (worst {worst:.5})"
    ))
}

fn reconstruction() -> Outcome {
    let (n, trials) = (10_000, 100);
    let mut good = 0;
    let mut worst = 0.0f64;
    for trial in 0..trials {
        let x = uniform_prefix(n, &mut tagged_substream(0xACCE, 6, trial));
        let est = reconstruct_prefix(&encode_prefix(&x), 10).unwrap();
        let err = est
            .iter()
            .zip(x.values())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        worst = worst.max(err);
        good += (err < 0.03) as usize;
    }
    check(good >= 95, || format!("only {good}/100 trials within 0.03"))?;
    Ok(format!(
        "{good}/100 trials with max_(i<=10) error < 0.03 at N = 1e4 (worst {worst:.5})"
    ))
}

fn rsk_bijectivity() -> Outcome {
    for n in 1..=7 {
        let mut pairs = HashSet::new();
        for perm in common::permutations(n) {
            let word: Vec<f64> = perm.iter().map(|&v| v as f64).collect();
            let (p_oracle, q_oracle) = common::rsk(&word);
            let (p, q) = rsk::rsk_permutation(&RankVector::new(perm.clone()).unwrap());
            let p_rows: Vec<Vec<f64>> = p
                .rows()
                .iter()
                .map(|r| r.iter().map(|&v| v as f64 - 1.0).collect())
                .collect();
            check(
                p_rows == p_oracle && q.rows() == q_oracle.as_slice(),
                || format!("insertion of {perm:?} differs from the oracle"),
            )?;
            let back = rsk::rsk_inverse_word(&p, &q).map_err(|e| e.to_string())?;
            let back: Vec<usize> = back.into_iter().map(|v| v - 1).collect();
            check(back == perm, || {
                format!("inverse of {perm:?} gives {back:?}")
            })?;
            pairs.insert((p, q));
        }
        check(pairs.len() as u128 == common::factorial(n), || {
            format!("collisions at n = {n}")
        })?;
        let sum: u128 = partitions(n)
            .iter()
            .map(|s| {
                let f = s.standard_count().unwrap();
                assert_eq!(f as usize, Tableau::all_of_shape(s).len());
                f * f
            })
            .sum();
        check(sum == common::factorial(n), || {
            format!("sum of f^2 at n = {n} is {sum}")
        })?;
    }
    Ok("round trips exact and sum of f^2 = n! for n = 1..7 (6 at n = 3, 24 at n = 4)".into())
}

fn promotion_shift(word: &[f64]) -> Result<(), String> {
    let q = rsk::rsk_insert(word).1;
    let promoted = rsk::promotion(&q).map_err(|e| e.to_string())?;
    let q_shift = common::rsk(&word[1..]).1;
    check(promoted.rows() == q_shift.as_slice(), || {
        format!("promotion of Q differs from Q of the shifted word {word:?}")
    })?;
    check(
        promoted.rows() == common::jdt_promotion(q.rows()).as_slice(),
        || "promotion differs from the sliding oracle".into(),
    )
}

fn promotion_intertwining() -> Outcome {
    let mut count = 0;
    for n in 2..=7 {
        for perm in common::permutations(n) {
            promotion_shift(&common::reals_of(&perm))?;
            count += 1;
        }
    }
    for trial in 0..1_000 {
        let x = uniform_prefix(100, &mut tagged_substream(0xACCE, 8, trial));
        promotion_shift(x.values())?;
    }
    Ok(format!(
        "{count} permutations n = 2..7 and 1000 random words of length 100"
    ))
}

fn young_graph_transfer() -> Outcome {
    let mut count = 0;
    for n in 2..=8 {
        let graph = YoungGraph::new(n);
        for rows in common::standard_tableaux(n) {
            let t = StandardTableau::standard(rows.clone()).map_err(|e| e.to_string())?;
            let path = tableau_to_path(&t).map_err(|e| e.to_string())?;
            let shapes: Vec<Vec<usize>> =
                path.vertices().iter().map(|s| s.rows().to_vec()).collect();
            check(shapes == common::growth_shapes(&rows), || {
                "tableau path".into()
            })?;
            let moved = graph_transfer(&graph, &path).map_err(|e| e.to_string())?;
            let expected = common::jdt_promotion(&rows);
            let got = path_to_tableau(&moved).map_err(|e| e.to_string())?;
            check(got.rows() == expected.as_slice(), || {
                format!(
                    "transfer of {rows:?} gives {:?}, sliding gives {expected:?}",
                    got.rows()
                )
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} standard tableaux with 2..8 cells"))
}

fn singleton_classes() -> Outcome {
    let mut report = Vec::new();
    for n in 1..=6 {
        let mut hits: HashMap<(StandardTableau, StandardTableau), usize> = HashMap::new();
        for perm in common::permutations(n) {
            let (p, q) = rsk::rsk_permutation(&RankVector::new(perm).unwrap());
            *hits.entry((p, q)).or_default() += 1;
        }
        let mut pairs = 0;
        for shape in partitions(n) {
            let all = Tableau::all_of_shape(&shape);
            for p in &all {
                for q in &all {
                    let c = hits.get(&(p.clone(), q.clone())).copied().unwrap_or(0);
                    check(c == 1, || format!("pair of shape {shape} hit {c} times"))?;
                    pairs += 1;
                }
            }
        }
        check(pairs == hits.len(), || {
            format!("a permutation lands outside same-shape pairs at n = {n}")
        })?;
        report.push(pairs.to_string());
    }
    Ok(format!(
        "each same-shape pair has exactly one permutation; pair counts {}",
        report.join(", ")
    ))
}

fn plancherel() -> Outcome {
    let samples = 100_000;
    let report = experiments::run_plancherel_fit(4, samples, 0xACCE).map_err(|e| e.to_string())?;
    let mut f: BTreeMap<Vec<usize>, f64> = BTreeMap::new();
    for t in common::standard_tableaux(4) {
        *f.entry(t.iter().map(Vec::len).collect()).or_default() += 1.0;
    }
    check(f.len() == 5, || format!("{} shapes", f.len()))?;
    let mut statistic = 0.0;
    for (shape, &count) in &f {
        let prob = count * count / 24.0;
        let reported = report
            .summary(&format!("shape_probability{shape:?}"), 4)
            .ok_or_else(|| format!("no probability row for {shape:?}"))?;
        check((reported - prob).abs() < 1e-12, || {
            format!("probability of {shape:?} is {reported}")
        })?;
        let freq = report
            .summary(&format!("shape_frequency{shape:?}"), 4)
            .ok_or_else(|| format!("no frequency row for {shape:?}"))?;
        let (o, e) = (freq * samples as f64, prob * samples as f64);
        statistic += (o - e) * (o - e) / e;
    }
    let p = ChiSquared::new(4.0).unwrap().sf(statistic);
    let reported = report.summary("p_value", 4).ok_or("no p_value row")?;
    check((p - reported).abs() < 1e-9, || {
        format!("reported p {reported} vs recomputed {p}")
    })?;
    check(p > 0.001, || {
        format!("p = {p:.3e}, statistic {statistic:.3}")
    })?;
    Ok(format!("chi-square {statistic:.3} on 4 df, p = {p:.4}"))
}

fn uniformity() -> Outcome {
    let report = experiments::run_uniformity(20, 100_000, 0xACCE).map_err(|e| e.to_string())?;
    let coords: Vec<f64> = report
        .rows_named("coordinate_p_value")
        .map(|r| r.value)
        .collect();
    let pairs: Vec<(String, f64)> = report
        .rows
        .iter()
        .filter(|r| r.statistic.starts_with("pair_p_value"))
        .map(|r| (r.statistic.clone(), r.value))
        .collect();
    check(coords.len() >= 19, || {
        format!("{} coordinate tests", coords.len())
    })?;
    check(pairs.len() == 10, || format!("{} pair tests", pairs.len()))?;
    let min_c = coords.iter().copied().fold(1.0, f64::min);
    let min_p = pairs.iter().map(|p| p.1).fold(1.0, f64::min);
    check(min_c > 0.001, || {
        format!("smallest coordinate p = {min_c:.3e}")
    })?;
    check(min_p > 0.001, || format!("smallest pair p = {min_p:.3e}"))?;
    Ok(format!(
        "{} coordinate tests (min p {min_c:.4}), 10 pair tests (min p {min_p:.4})",
        coords.len()
    ))
}

fn entropy() -> Outcome {
    let n_max = 10_000;
    let report = experiments::run_entropy_curve(n_max).map_err(|e| e.to_string())?;
    let values: Vec<(u64, f64)> = report
        .rows_named("entropy_per_coordinate")
        .map(|r| (r.n, r.value))
        .collect();
    check(values.len() == n_max, || format!("{} rows", values.len()))?;
    let mut worst = 0.0f64;
    for &(n, h) in &values {
        let closed = statrs::function::gamma::ln_gamma(n as f64 + 1.0) / n as f64;
        worst = worst.max((h - closed).abs());
        check((h - closed).abs() < 1e-12, || {
            format!("n = {n}: {h} vs {closed}")
        })?;
    }
    for w in values.windows(2).skip(1) {
        check(w[1].1 > w[0].1, || {
            format!("not increasing at n = {}", w[1].0)
        })?;
    }
    Ok(format!(
        "max deviation {worst:.2e} for n <= 1e4, strictly increasing from n = 2"
    ))
}

fn q_separation() -> Outcome {
    let report = experiments::run_rsk_separation(50, 1_000, 0xACCE).map_err(|e| e.to_string())?;
    let f5 = report
        .summary("q_separated_fraction", 5)
        .ok_or("no row at n = 5")?;
    let f50 = report
        .summary("q_separated_fraction", 50)
        .ok_or("no row at n = 50")?;
    check(f50 >= f5, || format!("fraction fell from {f5} to {f50}"))?;
    check(f50 >= 0.95, || format!("fraction at n = 50 is {f50}"))?;
    Ok(format!(
        "separated fraction {f5:.3} at n = 5, {f50:.3} at n = 50"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 14] = [
        ("code bijection, n <= 8", code_bijection),
        ("transfer intertwines with the shift", intertwining),
        ("special-count identity", displayed_identity),
        ("tree translation and commuting removals", tree_translation),
        ("first coordinate from d_N/N", first_coordinate_limit),
        ("reconstruction of the first 10 coordinates", reconstruction),
        ("RSK bijectivity, n <= 7", rsk_bijectivity),
        (
            "promotion intertwines with the shift",
            promotion_intertwining,
        ),
        (
            "Young-graph transfer equals sliding promotion",
            young_graph_transfer,
        ),
        ("same-shape tableau pairs are singletons", singleton_classes),
        ("Plancherel shape frequencies, n = 4", plancherel),
        (
            "code coordinates uniform and independent, n = 20",
            uniformity,
        ),
        ("entropy curve against ln Gamma", entropy),
        ("recording-tableau separation trend", q_separation),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(run).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS [{:02}] {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{:02}] {name}: {why} ({secs:.1}s)", i + 1)
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
