use std::path::Path;

use iterbound::ber::{estimate_ber_curve, BerEstimate, BerTarget};
use iterbound::channel::ChannelModel;
use iterbound::density::{de_bec, ga_awgn, DeTrace};
use iterbound::graph::{load_alist, peg_construct, EnsembleSpec, TannerGraph};
use iterbound::oracle::expected_min_weight_mc;
use iterbound::recursion::{
    empirical_tail, irregular_lower_bound, maxdeg_relaxation, recursion_run, tail_distribution,
};
use iterbound::regular::{
    closed_form_lower, fit_a0, gamma, lentmaier_gamma, lentmaier_upper, valid_tree_prob_lb, vt_counts,
    weight_ub_regular, BoundPoint, RegularParams,
};

use crate::config::{CodeSource, ExperimentConfig, ExperimentKind, FitSource, Sigma2Conversion};
use crate::manifest::{now_rfc3339, OutputDigest, RunManifest};
use crate::output::{fmt_num, fmt_opt, Table};
use crate::CliError;

/// Tables and notes produced by one experiment, before anything is written.
#[derive(Debug, Clone, Default)]
pub struct Computed {
    pub tables: Vec<Table>,
    pub notes: Vec<String>,
    pub sigma2_conversion: Option<Sigma2Conversion>,
}

/// Runs `config` on a pool of `threads` workers (0 = rayon default) and
/// writes the outputs to `out_dir`.
pub fn run(config: &ExperimentConfig, out_dir: &Path, threads: usize) -> Result<RunManifest, CliError> {
    let started_at = now_rfc3339();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().map_err(|e| CliError::Other(e.into()))?;
    let computed = pool.install(|| compute(config))?;
    std::fs::create_dir_all(out_dir).map_err(|e| CliError::Other(e.into()))?;
    std::fs::write(out_dir.join("config.json"), config.canonical_json()).map_err(|e| CliError::Other(e.into()))?;
    let mut outputs = Vec::new();
    for table in &computed.tables {
        let (path, sha256) = table.write(out_dir)?;
        let file = path.file_name().expect("file name").to_string_lossy().into_owned();
        outputs.push(OutputDigest { file, sha256, rows: table.rows.len() });
    }
    let manifest = RunManifest {
        tool: "iterbound",
        version: env!("CARGO_PKG_VERSION"),
        kind: config.kind.as_str().into(),
        config_hash: RunManifest::config_hash(config),
        config: config.clone(),
        threads: pool.current_num_threads(),
        started_at,
        finished_at: now_rfc3339(),
        sigma2_conversion: computed.sigma2_conversion,
        outputs,
        notes: computed.notes,
    };
    manifest.write(out_dir)?;
    Ok(manifest)
}

/// Runs the experiment on the current rayon pool.
pub fn compute(config: &ExperimentConfig) -> Result<Computed, CliError> {
    match config.kind {
        ExperimentKind::Bounds => bounds(config),
        ExperimentKind::Simulate => simulate(config),
        ExperimentKind::De => de(config),
        ExperimentKind::Recursion => recursion(config),
        ExperimentKind::Tail => tail(config, false),
        ExperimentKind::Oracle => oracle(config),
        ExperimentKind::Figure5 => figure5(config),
        ExperimentKind::Figure6 => tail(config, true),
    }
}

fn channel(
    config: &ExperimentConfig,
    spec: Option<&EnsembleSpec>,
) -> Result<(ChannelModel, Option<Sigma2Conversion>), CliError> {
    let rate = spec.map(|s| s.design_rate()).transpose()?;
    config.require(config.channel, "channel")?.resolve(rate)
}

/// `(J, K)` when the ensemble is regular with `J >= 3`.
fn closed_form_degrees(spec: &EnsembleSpec) -> Option<(usize, usize)> {
    spec.regular_degrees().filter(|&(j, _)| j >= 3)
}

fn lower_bound(
    config: &ExperimentConfig,
    spec: &EnsembleSpec,
    ch: &ChannelModel,
    l: usize,
) -> Result<BoundPoint<f64>, CliError> {
    Ok(match closed_form_degrees(spec) {
        Some((j, k)) => closed_form_lower(ch, &RegularParams { j, k, n: spec.n_vars(), l, theta1: config.theta1 })?,
        None => irregular_lower_bound(ch, spec.var_dist(), spec.check_dist(), spec.n_vars(), l, config.theta1)?,
    })
}

fn bound_table(name: &str, points: &[BoundPoint<f64>]) -> Table {
    let mut t =
        Table::new(name, vec!["l", "regime", "w_ub", "p_lower", "gamma_lower", "p_lower_relaxed", "p_upper_lentmaier"]);
    for p in points {
        t.push(vec![
            p.l.to_string(),
            p.regime.as_str().into(),
            fmt_num(p.w_ub),
            fmt_num(p.p_lower),
            fmt_opt(p.gamma_lower),
            fmt_opt(p.p_lower_relaxed),
            fmt_opt(p.p_upper_lentmaier),
        ]);
    }
    t
}

fn check_theta1(config: &ExperimentConfig) -> Result<(), CliError> {
    if !(config.theta1 > 0.0 && config.theta1 < 1.0) {
        return Err(CliError::Config(format!("theta1: {} must lie in (0, 1)", config.theta1)));
    }
    Ok(())
}

fn bounds(config: &ExperimentConfig) -> Result<Computed, CliError> {
    check_theta1(config)?;
    let spec = config.spec()?;
    let (ch, conv) = channel(config, Some(&spec))?;
    let ls = config.iterations()?;
    let mut out = Computed { sigma2_conversion: conv, ..Default::default() };
    let a0 = config.upper.and_then(|u| u.a0);
    let upper_j = spec.var_dist().max_degree();
    let mut points = Vec::new();
    for l in ls.values() {
        let mut p = lower_bound(config, &spec, &ch, l)?;
        p.p_upper_lentmaier = a0.map(|a0| lentmaier_upper(upper_j, l, a0));
        points.push(p);
    }
    out.tables.push(bound_table("bounds", &points));
    if a0.is_some() {
        out.notes.push(format!("p_upper_lentmaier: form-only upper bound (a0 supplied), J = {upper_j}"));
    }
    if closed_form_degrees(&spec).is_none() {
        out.notes.push("bounds.csv: distance-recursion bound for a non-closed-form ensemble".into());
        let relaxed: Result<Vec<_>, _> = ls
            .values()
            .map(|l| maxdeg_relaxation(&ch, spec.var_dist(), spec.check_dist(), spec.n_vars(), l, config.theta1))
            .collect();
        match relaxed {
            Ok(points) => out.tables.push(bound_table("bounds_maxdeg", &points)),
            Err(e) => out.notes.push(format!("bounds_maxdeg: {e}")),
        }
    }
    Ok(out)
}

fn simulation_code(config: &ExperimentConfig, spec: Option<&EnsembleSpec>) -> Result<Option<TannerGraph>, CliError> {
    Ok(match config.code {
        CodeSource::Alist => {
            let path =
                config.alist.as_ref().ok_or_else(|| CliError::Config("alist: required when code = alist".into()))?;
            Some(load_alist(path).map_err(|e| CliError::Config(format!("alist {}: {e}", path.display())))?)
        }
        CodeSource::Peg => {
            let spec = spec.ok_or_else(|| CliError::Config("ensemble: required when code = peg".into()))?;
            let seq = spec.degree_sequences()?;
            Some(peg_construct(spec.n_vars(), &seq.var_degrees, seq.check_degrees.len())?)
        }
        CodeSource::Ensemble => None,
    })
}

fn simulate_curve(
    config: &ExperimentConfig,
    spec: Option<&EnsembleSpec>,
    code: Option<&TannerGraph>,
    ch: &ChannelModel,
    max_l: usize,
) -> Result<Vec<BerEstimate<f64>>, CliError> {
    let trials = config.require(config.trials, "trials")?;
    let target = match (code, spec) {
        (Some(g), _) => BerTarget::Graph(g),
        (None, Some(spec)) => BerTarget::Ensemble { spec, trials_per_graph: config.trials_per_graph },
        (None, None) => return Err(CliError::Config("ensemble: required when code = ensemble".into())),
    };
    Ok(estimate_ber_curve(target, ch, max_l, trials, config.seed)?)
}

fn simulate(config: &ExperimentConfig) -> Result<Computed, CliError> {
    let spec = config.ensemble.as_ref().map(|e| e.to_spec()).transpose()?;
    let code = simulation_code(config, spec.as_ref())?;
    let rate = match (&code, &spec) {
        (_, Some(s)) => Some(s.design_rate()?),
        (Some(g), None) => Some(1.0 - g.n_checks() as f64 / g.n_vars() as f64),
        _ => None,
    };
    let (ch, conv) = config.require(config.channel, "channel")?.resolve(rate)?;
    let ls = config.iterations()?;
    let curve = simulate_curve(config, spec.as_ref(), code.as_ref(), &ch, ls.to)?;
    let mut t = Table::new("simulate", vec!["l", "ber", "std_error", "trials", "bits"]);
    for l in ls.values() {
        let e = &curve[l];
        t.push(vec![l.to_string(), fmt_num(e.ber), fmt_num(e.std_error), e.trials.to_string(), e.bits.to_string()]);
    }
    let mut out = Computed { tables: vec![t], sigma2_conversion: conv, ..Default::default() };
    out.notes.push("BER counts tied (zero) marginals as half an error".into());
    Ok(out)
}

fn de_trace(spec: &EnsembleSpec, ch: &ChannelModel, max_l: usize) -> Result<Option<DeTrace<f64>>, CliError> {
    Ok(match *ch {
        ChannelModel::Bec { epsilon } => Some(de_bec(spec.var_dist(), spec.check_dist(), epsilon, max_l)?),
        ChannelModel::Biawgn { sigma2 } => Some(ga_awgn(spec.var_dist(), spec.check_dist(), sigma2, max_l)?),
        ChannelModel::Bsc { .. } => None,
    })
}

fn de(config: &ExperimentConfig) -> Result<Computed, CliError> {
    let spec = config.spec()?;
    let (ch, conv) = channel(config, Some(&spec))?;
    let ls = config.iterations()?;
    let trace = de_trace(&spec, &ch, ls.to)?
        .ok_or_else(|| CliError::Config("channel: density evolution is available for bec and biawgn only".into()))?;
    let mut t = Table::new("de", vec!["t", "message_error", "ber", "method"]);
    for l in ls.values() {
        t.push(vec![l.to_string(), fmt_num(trace.message_error[l]), fmt_num(trace.ber[l]), trace.kind.label().into()]);
    }
    Ok(Computed { tables: vec![t], sigma2_conversion: conv, notes: vec![format!("method: {}", trace.kind.label())] })
}

fn recursion(config: &ExperimentConfig) -> Result<Computed, CliError> {
    check_theta1(config)?;
    let spec = config.spec()?;
    let ls = config.iterations()?;
    if ls.from == 0 {
        return Err(CliError::Config("iterations.from: the recursion needs l >= 1".into()));
    }
    let (l_dist, r_dist, n) = (spec.var_dist(), spec.check_dist(), spec.n_vars());
    let mut summary = Table::new("recursion", vec!["l", "l1", "branch", "w_ub"]);
    for l in ls.values() {
        let trace = recursion_run(l_dist, r_dist, n, l, config.theta1)?;
        let branch = if trace.general { "l_gt_l1" } else { "l_le_l1" };
        summary.push(vec![l.to_string(), fmt_num(trace.l1), branch.into(), fmt_num(trace.w_ub)]);
    }
    let last = recursion_run(l_dist, r_dist, n, ls.to, config.theta1)?;
    let mut steps = Table::new("recursion_steps", vec!["t", "p_tilde_even", "p_tilde_odd", "p_2t"]);
    for s in &last.steps {
        steps.push(vec![s.t.to_string(), fmt_opt(s.p_tilde_even), fmt_num(s.p_tilde_odd), fmt_num(s.p)]);
    }
    Ok(Computed {
        tables: vec![summary, steps],
        notes: vec![format!("recursion_steps.csv: chain for l = {}", ls.to)],
        ..Default::default()
    })
}

fn tail(config: &ExperimentConfig, figure: bool) -> Result<Computed, CliError> {
    let spec = config.spec()?;
    let d_max = config.require(config.d_max, "d_max")?;
    let recursion = tail_distribution::<f64>(spec.var_dist(), spec.check_dist(), spec.n_vars(), d_max)?;
    let empirical = match (figure, config.instances) {
        (true, None) => return Err(CliError::Config("instances: required for figure6 experiments".into())),
        (_, Some(k)) if k > 0 => Some(empirical_tail::<f64>(&spec, d_max, k, config.roots_per_instance, config.seed)?),
        _ => None,
    };
    let emp = |d: usize| empirical.as_ref().map(|e| e.excluding_root[d]);
    let se = |d: usize| empirical.as_ref().and_then(|e| e.std_error.as_ref()).map(|s| s[d]);
    let mut notes = vec!["tail values are over pairs v_j != v_i (P(dist > 0) = 1)".to_string()];
    let table = if figure {
        let mut t = Table::new("figure6", vec!["d_prime", "tail_recursion", "tail_empirical", "stderr"]);
        for d in 0..=d_max {
            t.push(vec![d.to_string(), fmt_num(recursion.excluding_root[d]), fmt_opt(emp(d)), fmt_opt(se(d))]);
        }
        t
    } else {
        let mut t = Table::new(
            "tail",
            vec!["d_prime", "tail_excluding_root", "tail_including_root", "tail_empirical", "stderr"],
        );
        for d in 0..=d_max {
            t.push(vec![
                d.to_string(),
                fmt_num(recursion.excluding_root[d]),
                fmt_num(recursion.including_root[d]),
                fmt_opt(emp(d)),
                fmt_opt(se(d)),
            ]);
        }
        notes.push("tail_including_root multiplies in P(dist > 0) = 1 - 1/N".into());
        t
    };
    if let Some(e) = &empirical {
        let deviation =
            e.excluding_root.iter().zip(&recursion.excluding_root).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        notes.push(format!("max |recursion - empirical| = {}", fmt_num(deviation)));
    }
    Ok(Computed { tables: vec![table], notes, ..Default::default() })
}

fn oracle(config: &ExperimentConfig) -> Result<Computed, CliError> {
    check_theta1(config)?;
    let spec = config.spec()?;
    let ls = config.iterations()?;
    let samples = config.require(config.trials, "trials")?;
    let regular = closed_form_degrees(&spec);
    let mut t = Table::new(
        "oracle",
        vec![
            "l",
            "samples",
            "mean",
            "std_error",
            "infeasible",
            "skipped",
            "w_ub",
            "vt_weight",
            "frac_at_most_vt",
            "frac_stderr",
            "valid_tree_prob_lb",
        ],
    );
    let mut skipped = 0;
    for l in ls.values() {
        let summary = expected_min_weight_mc(&spec, l, samples, config.seed)?;
        skipped += summary.skipped_count;
        let (w_ub, vt, lb) = match regular {
            Some((j, k)) => {
                let wb = weight_ub_regular(&RegularParams { j, k, n: spec.n_vars(), l, theta1: config.theta1 })?;
                let vt = vt_counts(j, 2 * l)?.0 as usize;
                (wb.w, Some(vt), valid_tree_prob_lb::<f64>(j, k, spec.n_vars(), l).ok())
            }
            None if l >= 1 => {
                (recursion_run(spec.var_dist(), spec.check_dist(), spec.n_vars(), l, config.theta1)?.w_ub, None, None)
            }
            None => (1.0, None, None),
        };
        let frac = vt.map(|w| summary.fraction_at_most(w));
        t.push(vec![
            l.to_string(),
            samples.to_string(),
            fmt_num(summary.mean),
            fmt_num(summary.std_error),
            summary.infeasible_count.to_string(),
            summary.skipped_count.to_string(),
            fmt_num(w_ub),
            vt.map(|w| w.to_string()).unwrap_or_default(),
            fmt_opt(frac.map(|f| f.0)),
            fmt_opt(frac.map(|f| f.1)),
            fmt_opt(lb),
        ]);
    }
    if skipped > 0 {
        return Err(CliError::Capacity(format!(
            "{skipped} sample(s) exceeded the enumeration limit of {} free variables; reduce l or N",
            iterbound::oracle::MAX_FREE_DIMENSION
        )));
    }
    Ok(Computed { tables: vec![t], ..Default::default() })
}

/// First-order standard error of `gamma(p)` from that of `p`.
fn gamma_stderr(p: f64, se: f64) -> f64 {
    se / (p * (-p.ln()) * std::f64::consts::LN_2)
}

fn figure5(config: &ExperimentConfig) -> Result<Computed, CliError> {
    check_theta1(config)?;
    let spec = config.spec()?;
    let (ch, conv) = channel(config, Some(&spec))?;
    let ls = config.iterations()?;
    let de = de_trace(&spec, &ch, ls.to)?;
    let code = simulation_code(config, Some(&spec))?;
    let sim = simulate_curve(config, Some(&spec), code.as_ref(), &ch, ls.to)?;
    let upper_j = spec.var_dist().max_degree();
    let mut notes = Vec::new();
    // On the BEC every wrong decision is a tie, so twice the half-error BER
    // is the erasure rate that DE and the bound describe.
    let sim_scale = if matches!(ch, ChannelModel::Bec { .. }) {
        notes.push("p_sim: simulated erasure rate (twice the half-error BER)".into());
        2.0
    } else {
        1.0
    };
    let p_sim: Vec<(f64, f64)> = sim.iter().map(|e| (sim_scale * e.ber, sim_scale * e.std_error)).collect();
    let a0 = match config.upper.and_then(|u| u.a0) {
        Some(a0) => {
            notes.push(format!("upper: form-only upper bound (a0 supplied = {}), J = {upper_j}", fmt_num(a0)));
            Some(a0)
        }
        None => {
            let anchor = config.upper.and_then(|u| u.fit_anchor).unwrap_or(ls.to);
            if !ls.values().contains(&anchor) {
                return Err(CliError::Config(format!("upper.fit_anchor: {anchor} outside the iteration range")));
            }
            let fit_source = config.upper.unwrap_or_default().fit_source;
            let (p, source) = match (fit_source, &de) {
                (FitSource::De, Some(trace)) => (trace.ber[anchor], "DE"),
                (FitSource::De, None) => {
                    return Err(CliError::Config("upper.fit_source: no DE curve for this channel".into()))
                }
                (FitSource::Sim, _) => (p_sim[anchor].0, "simulated"),
            };
            match fit_a0(upper_j, anchor, p) {
                Ok(a0) => {
                    notes.push(format!(
                        "upper: form-only upper bound (a0 fitted = {} to the {source} BER at l = {anchor}), J = {upper_j}",
                        fmt_num(a0)
                    ));
                    Some(a0)
                }
                Err(e) => {
                    notes.push(format!("upper: fit failed at l = {anchor}: {e}"));
                    None
                }
            }
        }
    };
    if let Some(trace) = &de {
        notes.push(format!("gamma_de: {}", trace.kind.label()));
    }
    notes.push("sim_stderr: standard error of gamma_sim by the delta method".into());
    if sim_scale == 1.0 {
        notes.push("simulated BER counts tied (zero) marginals as half an error".into());
    }
    let mut gammas =
        Table::new("figure5", vec!["l", "gamma_lower", "gamma_de", "gamma_upper", "gamma_sim", "sim_stderr"]);
    let mut probs =
        Table::new("figure5_probabilities", vec!["l", "regime", "p_lower", "p_de", "p_upper", "p_sim", "sim_stderr"]);
    for l in ls.values() {
        let lower = lower_bound(config, &spec, &ch, l)?;
        let p_de = de.as_ref().map(|t| t.ber[l]);
        let p_upper = a0.map(|a0| lentmaier_upper(upper_j, l, a0));
        let g_upper = a0.map(|a0| lentmaier_gamma(upper_j, l, a0));
        let (ps, se) = p_sim[l];
        let g_sim = gamma(ps).ok();
        gammas.push(vec![
            l.to_string(),
            fmt_opt(lower.gamma_lower),
            fmt_opt(p_de.and_then(|p| gamma(p).ok())),
            fmt_opt(g_upper),
            fmt_opt(g_sim),
            fmt_opt(g_sim.map(|_| gamma_stderr(ps, se))),
        ]);
        probs.push(vec![
            l.to_string(),
            lower.regime.as_str().into(),
            fmt_num(lower.p_lower),
            fmt_opt(p_de),
            fmt_opt(p_upper),
            fmt_num(ps),
            fmt_num(se),
        ]);
    }
    Ok(Computed { tables: vec![gammas, probs], notes, sigma2_conversion: conv })
}
