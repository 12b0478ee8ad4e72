use std::path::Path;
use std::time::Instant;

use gtopx::landscape::{grid_pair, local_sample, track_best, write_grid, RecordWriter, SIGNIFICANT_PERCENT};
use gtopx::suite::{evaluate, info as spec_info, is_feasible, problems, ProblemSpec};
use gtopx::vectors::{parse_line, parse_vectors};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::error::CliError;
use crate::format::g17;

/// Samples are generated, written and tracked in chunks of this size.
const CHUNK: u64 = 20_000;

pub fn pool(threads: Option<usize>) -> Result<rayon::ThreadPool, CliError> {
    if threads == Some(0) {
        return Err(CliError::Usage("thread count must be at least 1".into()));
    }
    Ok(rayon::ThreadPoolBuilder::new().num_threads(threads.unwrap_or(0)).build()?)
}

fn best_known(spec: &ProblemSpec) -> String {
    spec.best_known_f.map_or_else(|| "na".to_string(), |f| f.to_string())
}

fn sequence(spec: &ProblemSpec) -> Vec<String> {
    spec.default_sequence.iter().map(|b| b.to_string()).collect()
}

pub fn info(id: Option<u32>, json: bool) -> Result<(), CliError> {
    let Some(id) = id else {
        if json {
            let rows: Vec<_> = problems()
                .iter()
                .map(|s| json!({"id": s.id, "name": s.name, "o": s.n_obj, "n": s.n, "m": s.m, "n_int": s.n_int, "best_known": s.best_known_f}))
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows).expect("plain values serialize"));
        } else {
            println!("{:>2}  {:<20} {:>2} {:>3} {:>2} {:>5}  best-known", "id", "name", "o", "n", "m", "n_int");
            for s in problems() {
                println!(
                    "{:>2}  {:<20} {:>2} {:>3} {:>2} {:>5}  {}",
                    s.id,
                    s.name,
                    s.n_obj,
                    s.n,
                    s.m,
                    s.n_int,
                    best_known(s)
                );
            }
        }
        return Ok(());
    };

    let s = spec_info(id)?;
    if json {
        let v = json!({
            "id": s.id, "name": s.name, "o": s.n_obj, "n": s.n, "m": s.m, "n_int": s.n_int,
            "best_known": s.best_known_f, "sequence": sequence(s),
            "integer_variables": s.integer_slots.iter().map(|k| k + 1).collect::<Vec<_>>(),
            "lb": s.lb, "ub": s.ub,
        });
        println!("{}", serde_json::to_string_pretty(&v).expect("plain values serialize"));
        return Ok(());
    }
    println!("id          {}", s.id);
    println!("name        {}", s.name);
    println!("objectives  {}", s.n_obj);
    println!("variables   {} ({} integer)", s.n, s.n_int);
    println!("constraints {}", s.m);
    println!("best-known  {}", best_known(s));
    println!("sequence    {}", sequence(s).join(" "));
    println!("bounds");
    for k in 0..s.n {
        let tag = if s.is_integer(k) { "  integer" } else { "" };
        println!("  x{:<3} {:>14} {:>14}{tag}", k + 1, s.lb[k], s.ub[k]);
    }
    Ok(())
}

fn read_vectors(path: &Path) -> Result<Vec<Vec<f64>>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.into(), source })?;
    parse_vectors(&text).map_err(|source| CliError::Parse { path: path.into(), source })
}

/// First vector of a file, for center and base points.
fn read_point(path: &Path) -> Result<Vec<f64>, CliError> {
    read_vectors(path)?
        .into_iter()
        .next()
        .ok_or_else(|| CliError::Usage(format!("{}: no vector found", path.display())))
}

fn warn_out_of_bounds(spec: &ProblemSpec, x: &[f64], label: &str) {
    if x.len() != spec.n {
        return;
    }
    let outside: Vec<String> =
        (0..spec.n).filter(|&k| !(spec.lb[k] <= x[k] && x[k] <= spec.ub[k])).map(|k| format!("x{}", k + 1)).collect();
    if !outside.is_empty() {
        eprintln!("warning: {label}outside bounds: {}", outside.join(", "));
    }
}

pub fn eval(id: u32, inline: Option<&str>, file: Option<&Path>) -> Result<(), CliError> {
    let spec = spec_info(id)?;
    let vectors = match (inline, file) {
        (Some(text), _) => {
            let v = parse_line(text, 1)
                .map_err(|e| CliError::Usage(format!("--x: cannot parse {:?} as a number", e.token)))?;
            vec![v.ok_or_else(|| CliError::Usage("--x: empty vector".into()))?]
        }
        (None, Some(path)) => read_vectors(path)?,
        (None, None) => unreachable!("clap requires one of --x or --file"),
    };
    if vectors.is_empty() {
        return Err(CliError::Usage("no vectors to evaluate".into()));
    }
    // Check every dimension before evaluating anything.
    for x in &vectors {
        if x.len() != spec.n {
            return Err(gtopx::SuiteError::Dimension { id, expected: spec.n, got: x.len() }.into());
        }
    }
    let many = vectors.len() > 1;
    for (k, x) in vectors.iter().enumerate() {
        let label = if many { format!("vector {}: ", k + 1) } else { String::new() };
        warn_out_of_bounds(spec, x, &label);
        let r = evaluate(id, x)?;
        if many {
            println!("# vector {}", k + 1);
        }
        for (i, f) in r.f.iter().enumerate() {
            println!("f{} {}", i + 1, g17(*f));
        }
        for (i, g) in r.g.iter().enumerate() {
            println!("g{} {}", i + 1, g17(*g));
        }
        println!("feasible {}", is_feasible(&r));
    }
    Ok(())
}

pub fn sample(id: u32, center: &Path, count: u64, seed: u64, out: &Path) -> Result<(), CliError> {
    let spec = spec_info(id)?;
    let center = read_point(center)?;
    warn_out_of_bounds(spec, &center, "center ");
    let sampler = local_sample(id, &center, count, seed)?;
    let incumbent = evaluate(id, &center)?;
    let f0 = incumbent.f[0];

    let t = Instant::now();
    let mut writer = RecordWriter::create(out, id)?;
    let (mut improvements, mut feasible, mut errors) = (Vec::new(), 0u64, 0u64);
    let mut best: Option<(u64, f64)> = None;
    for start in (0..count).step_by(CHUNK as usize) {
        let batch = sampler.batch(start, (start + CHUNK).min(count));
        for r in &batch {
            writer.write(r)?;
            feasible += u64::from(r.feasible);
            errors += u64::from(r.error.is_some());
            if r.feasible && best.is_none_or(|(_, f)| r.f[0] < f) {
                best = Some((r.index, r.f[0]));
            }
        }
        improvements.extend(track_best(&batch, f0).improvements);
    }
    writer.finish()?;

    println!("instance    {} {}", id, spec.name);
    println!("samples     {count} (seed {seed}) in {:.2} s", t.elapsed().as_secs_f64());
    println!("feasible    {feasible}");
    if errors > 0 {
        println!("errors      {errors}");
    }
    println!("center f    {}{}", g17(f0), if is_feasible(&incumbent) { "" } else { " (infeasible)" });
    match best {
        Some((index, f)) => println!("best f      {} (sample {index})", g17(f)),
        None => println!("best f      none feasible"),
    }
    let significant = improvements.iter().filter(|i| i.significant).count();
    println!("improvements {} ({significant} of at least {SIGNIFICANT_PERCENT}%)", improvements.len());
    // Successive new bests only; the CSV has everything.
    let mut running = f0;
    for imp in improvements.iter().filter(|i| {
        let new_best = i.f < running;
        running = running.min(i.f);
        new_best
    }) {
        let flag = if imp.significant { "significant" } else { "below threshold" };
        println!("  sample {:>9}  f {}  {:.6}%  {flag}", imp.index, g17(imp.f), imp.percent);
    }
    println!("wrote       {}", out.display());
    Ok(())
}

pub fn grid(id: u32, base: &Path, i: usize, j: usize, out: &Path) -> Result<(), CliError> {
    let spec = spec_info(id)?;
    for v in [i, j] {
        if v == 0 || v > spec.n {
            return Err(CliError::Usage(format!("variable index {v} out of range 1..={}", spec.n)));
        }
    }
    let base = read_point(base)?;
    warn_out_of_bounds(spec, &base, "base ");
    let t = Instant::now();
    let slice = grid_pair(id, &base, i - 1, j - 1)?;
    write_grid(out, &slice)?;
    println!("instance    {} {}", id, spec.name);
    println!(
        "grid        x{i} x {j}: {} x {} cells in {:.2} s",
        slice.axis_i.len(),
        slice.axis_j.len(),
        t.elapsed().as_secs_f64()
    );
    println!("x{i:<10} [{}, {}]", g17(slice.axis_i[0]), g17(*slice.axis_i.last().unwrap()));
    println!("x{j:<10} [{}, {}]", g17(slice.axis_j[0]), g17(*slice.axis_j.last().unwrap()));
    match slice.min_feasible() {
        Some((a, b, f)) => {
            println!("min f       {}", g17(f));
            println!("  at x{i} = {}, x{j} = {}", g17(slice.axis_i[a]), g17(slice.axis_j[b]));
        }
        None => println!("min f       no feasible cell"),
    }
    println!("wrote       {}", out.display());
    Ok(())
}

/// Uniform point `k` of the benchmark stream; independent of thread count.
fn bench_point(spec: &ProblemSpec, seed: u64, k: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k);
    (0..spec.n)
        .map(|i| {
            let v = rng.random_range(spec.lb[i]..=spec.ub[i]);
            if spec.is_integer(i) {
                v.round()
            } else {
                v
            }
        })
        .collect()
}

pub fn bench(id: u32, count: u64, seed: u64, threads: usize) -> Result<(), CliError> {
    let spec = spec_info(id)?;
    if count == 0 {
        return Err(CliError::Usage("count must be at least 1".into()));
    }
    let t = Instant::now();
    let results: Vec<Option<u64>> = (0..count)
        .into_par_iter()
        .map(|k| evaluate(id, &bench_point(spec, seed, k)).ok().map(|r| r.f[0].to_bits()))
        .collect();
    let seconds = t.elapsed().as_secs_f64();
    // FNV-1a over the objective bits in index order.
    let mut checksum = 0xcbf2_9ce4_8422_2325u64;
    for bits in &results {
        checksum ^= bits.unwrap_or(u64::MAX);
        checksum = checksum.wrapping_mul(0x0000_0100_0000_01b3);
    }
    let errors = results.iter().filter(|r| r.is_none()).count();
    println!("instance    {} {}", id, spec.name);
    println!("threads     {threads}");
    println!("evaluations {count} ({errors} errors)");
    println!("seconds     {seconds:.3}");
    println!("throughput  {:.0} evals/s", count as f64 / seconds);
    println!("checksum    {checksum:016x}");
    Ok(())
}
