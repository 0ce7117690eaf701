use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Context, Result};
use closed_chroma_core::closedforms::{
    binary_tree_coeffs, classify, default_quotient, petersen_frontier, tiling_quotient_witness,
    FrontierRecord,
};
use closed_chroma_core::engine::{
    closed_chromatic_number_with_budget, coloring_from_ieds, exact_chromatic_number, find_ieds, probe_additivity,
    verify_labeling, Budget, ClosedSystem, Labeling, SearchLimits, Verdict, SOURCE_IEDS, SOURCE_ORACLE,
};
use closed_chroma_core::graphs::{build_family, FamilyDescriptor, Graph};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{Caps, Cli, Command, FrontierKind, Input, Output, VerifyTarget};
use crate::edgelist::read_edge_list;
use crate::family::{self, parse_family, parse_list};
use crate::labeling::read_labeling;
use crate::report::{
    render, AdditivityRow, FrontierRow, IedsReport, IedsRow, Report, SeriesRow, SurveyRow, Tabular, VerifyOutput,
};

pub const THREADS_ENV: &str = "CLOSED_CHROMA_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Completed,
    /// A theorem and the oracle disagree, or a checked labeling is invalid.
    Failures,
}

impl Status {
    fn from_failures(any: bool) -> Self {
        if any {
            Status::Failures
        } else {
            Status::Completed
        }
    }
}

/// Wall-clock budget checked between batches of work.
#[derive(Clone, Copy, Debug)]
pub struct Deadline(Option<Instant>);

impl Deadline {
    pub fn after(seconds: Option<f64>) -> Self {
        Deadline(seconds.map(|s| Instant::now() + Duration::from_secs_f64(s)))
    }

    fn passed(&self) -> bool {
        self.0.is_some_and(|end| Instant::now() >= end)
    }
}

impl Budget for Deadline {
    fn exhausted(&mut self) -> bool {
        self.passed()
    }
}

impl Caps {
    fn limits(&self) -> SearchLimits {
        SearchLimits {
            enumeration_cap: usize::try_from(self.enumeration_cap).unwrap_or(usize::MAX),
            chromatic_bound: self.chromatic_bound as usize,
            ieds_bound: usize::try_from(self.ieds_bound).unwrap_or(usize::MAX),
        }
    }
}

/// Worker pool sized by `CLOSED_CHROMA_THREADS`, else available parallelism.
fn pool() -> Result<rayon::ThreadPool> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => v.trim().parse::<usize>().ok().filter(|&t| t > 0).ok_or_else(|| anyhow!("{THREADS_ENV}={v} is not a positive integer"))?,
        Err(_) => 0,
    };
    Ok(rayon::ThreadPoolBuilder::new().num_threads(threads).build()?)
}

/// The graph under study with its report labels.
struct Subject {
    family: String,
    params: String,
    desc: FamilyDescriptor,
    graph: Option<Graph>,
}

impl Subject {
    fn load(family: Option<&str>, graph: Option<&Path>) -> Result<Self> {
        match (family, graph) {
            (Some(text), None) => {
                let desc = parse_family(text)?;
                let graph = if desc.is_finite() { Some(build_family(&desc)?) } else { None };
                Ok(Subject { family: desc.family_name().to_string(), params: desc.params(), desc, graph })
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                let parsed = read_edge_list(&text).with_context(|| format!("parsing {}", path.display()))?;
                Ok(Subject {
                    family: String::from("graph"),
                    params: path.display().to_string(),
                    desc: FamilyDescriptor::Arbitrary(parsed.graph.clone()),
                    graph: Some(parsed.graph),
                })
            }
            _ => bail!("give exactly one of --family or --graph"),
        }
    }

    fn from_input(input: &Input) -> Result<Self> {
        Self::load(input.family.as_deref(), input.graph.as_deref())
    }

    fn finite_graph(&self) -> Result<&Graph> {
        self.graph.as_ref().ok_or_else(|| anyhow!("{} is not finitely realizable", self.desc))
    }
}

fn emit<T: Serialize + Tabular>(items: &[T], single: bool, out: &Output) -> Result<()> {
    let text = render(items, single, out.format)?;
    match &out.output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn millis(start: Instant) -> u64 {
    start.elapsed().as_millis().try_into().unwrap_or(u64::MAX)
}

pub fn run(cli: &Cli) -> Result<Status> {
    match &cli.command {
        Command::Compute { input, residue, caps, output } => {
            let subject = Subject::from_input(input)?;
            let g = subject.finite_graph()?;
            let start = Instant::now();
            let mut deadline = Deadline::after(caps.time_budget);
            let v = closed_chromatic_number_with_budget(g, residue.n, residue.k, &caps.limits(), &mut deadline)?;
            let mut report = Report::from_verdict(&subject.family, &subject.params, residue.n, residue.k, &v);
            report.timing_ms = output.timing.then(|| millis(start));
            emit(&[report], true, output)?;
            Ok(Status::Completed)
        }
        Command::Classify { input, residue, output } => {
            let subject = Subject::from_input(input)?;
            let start = Instant::now();
            let tv = classify(&subject.desc, residue.n, residue.k)?;
            let mut report = Report::from_theorem(&subject.family, &subject.params, residue.n, residue.k, &tv);
            report.timing_ms = output.timing.then(|| millis(start));
            emit(&[report], true, output)?;
            Ok(Status::Completed)
        }
        Command::Verify { target, n, k, labeling, report, output } => verify(target, *n, *k, labeling.as_deref(), report.as_deref(), output),
        Command::Survey { family, p1, p2, n, k, existence_only, caps, output } => {
            survey(family, p1.as_deref(), p2.as_deref(), n, k.as_deref(), *existence_only, caps, output)
        }
        Command::Frontier { kind } => match kind {
            FrontierKind::Petersen { m, j, n, k, open_only, caps, output } => frontier_petersen(m, j.as_deref(), n, k, *open_only, caps, output),
            FrontierKind::Additivity { input, n, caps, output } => frontier_additivity(input, n, caps, output),
            FrontierKind::Ieds { input, n, caps, output } => frontier_ieds(input, n, caps, output),
        },
        Command::Series { upto, output } => {
            let rows: Vec<SeriesRow> = binary_tree_coeffs(*upto)
                .into_iter()
                .map(|c| SeriesRow { index: c.index, alpha: c.alpha.to_string(), k: c.k.to_string(), form: c.to_string() })
                .collect();
            emit(&rows, false, output)?;
            Ok(Status::Completed)
        }
        Command::Ieds { input, n, k, caps, output } => ieds(input, *n, *k, caps, output),
    }
}

fn verify(target: &VerifyTarget, n: Option<u64>, k: Option<i64>, labeling: Option<&Path>, report: Option<&Path>, output: &Output) -> Result<Status> {
    let (subject, n, k, labels, claimed) = match (labeling, report) {
        (Some(path), None) => {
            let subject = Subject::load(target.family.as_deref(), target.graph.as_deref())?;
            let (n, k) = n.zip(k).ok_or_else(|| anyhow!("--labeling needs --n and --k"))?;
            if n == 0 {
                bail!("modulus must be positive");
            }
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let l = read_labeling(&text).with_context(|| format!("parsing {}", path.display()))?;
            (subject, n, k, Some(l), None)
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let r: Report = serde_json::from_str(&text).with_context(|| format!("parsing report {}", path.display()))?;
            let subject = match (&target.family, &target.graph) {
                (None, None) if r.family == "graph" => Subject::load(None, Some(&PathBuf::from(&r.params)))?,
                (None, None) => Subject::load(Some(&format!("{}:{}", r.family, r.params)), None)?,
                (f, g) => Subject::load(f.as_deref(), g.as_deref())?,
            };
            (subject, r.n, r.k, r.witness.map(Labeling::new), r.value)
        }
        _ => bail!("give exactly one of --labeling or --report"),
    };

    let mut out = VerifyOutput {
        family: subject.family.clone(),
        params: subject.params.clone(),
        n,
        k,
        checked: false,
        valid: true,
        proper: None,
        closed_ok: None,
        order: None,
        claimed_value: claimed,
        violation: None,
    };
    if let Some(l) = labels {
        let r = verify_labeling(subject.finite_graph()?, &l, n, k)?;
        let order_ok = claimed.is_none_or(|v| v == r.order);
        out.checked = true;
        out.valid = r.is_valid() && order_ok;
        out.proper = Some(r.proper);
        out.closed_ok = Some(r.closed_ok);
        out.order = Some(r.order);
        out.violation = r.first_violation.or_else(|| (!order_ok).then(|| format!("order {} differs from claimed value", r.order)));
    }
    let status = Status::from_failures(!out.valid);
    emit(&[out], true, output)?;
    Ok(status)
}

/// `existence` for existence-only cells, otherwise the full value.
fn oracle_cell(g: &Graph, system: &ClosedSystem, n: u64, k: i64, existence: bool, limits: &SearchLimits, deadline: Deadline) -> Result<Verdict> {
    let mut deadline = deadline;
    if deadline.passed() {
        return Ok(Verdict::unknown("budget"));
    }
    if existence {
        return Ok(match system.solve(n, k)? {
            Some(_) => Verdict::exists(None, None, SOURCE_ORACLE),
            None => Verdict::not_exists(SOURCE_ORACLE),
        });
    }
    Ok(closed_chromatic_number_with_budget(g, n, k, limits, &mut deadline)?)
}

fn cell_status(classifier: &Verdict, oracle: &Verdict) -> &'static str {
    let (ce, oe) = (classifier.existence(), oracle.existence());
    match (ce, oe) {
        (_, None) => "undecided",
        (None, Some(_)) => "resolved",
        (Some(a), Some(b)) if a != b => "failure",
        _ => match (classifier.value(), oracle.value()) {
            (Some(a), Some(b)) if a != b => "failure",
            _ => "agree",
        },
    }
}

fn survey_descriptors(name: &str, p1: Option<&str>, p2: Option<&str>) -> Result<Vec<FamilyDescriptor>> {
    let count = family::param_count(name).ok_or_else(|| anyhow!("unknown family `{name}`"))?;
    if name == "tiling" {
        return ["r3", "r4", "r6"]
            .into_iter()
            .filter(|t| p1.is_none_or(|sel| sel.split(',').any(|s| s.trim().eq_ignore_ascii_case(t))))
            .map(|t| Ok(parse_family(&format!("tiling:{t}"))?))
            .collect();
    }
    let first: Vec<usize> = parse_list(p1.ok_or_else(|| anyhow!("survey of `{name}` needs --p1"))?)?;
    let mut out = Vec::new();
    for &a in &first {
        if count == 1 {
            out.push(family::build(name, &[a])?);
            continue;
        }
        let second: Vec<usize> = match p2 {
            Some(text) => parse_list(text)?,
            None if name == "petersen" => (1..a).take_while(|j| 2 * j < a).collect(),
            None => bail!("survey of `{name}` needs --p2"),
        };
        // Parameter pairs outside the domain are skipped.
        out.extend(second.iter().filter_map(|&b| family::build(name, &[a, b]).ok()));
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn survey(name: &str, p1: Option<&str>, p2: Option<&str>, ns: &str, ks: Option<&str>, existence_only: bool, caps: &Caps, output: &Output) -> Result<Status> {
    let descs = survey_descriptors(name, p1, p2)?;
    let ns: Vec<u64> = parse_list(ns)?;
    if ns.contains(&0) {
        bail!("modulus must be positive");
    }
    let ks: Option<Vec<i64>> = ks.map(parse_list).transpose()?;
    let limits = caps.limits();
    let deadline = Deadline::after(caps.time_budget);

    let mut cells = Vec::new();
    for i in 0..descs.len() {
        for &n in &ns {
            let row_ks = ks.clone().unwrap_or_else(|| (0..n as i64).collect());
            cells.extend(row_ks.into_iter().map(|k| (i, n, k)));
        }
    }
    let mut graphs: Vec<Option<(Graph, ClosedSystem)>> = Vec::new();
    for d in &descs {
        graphs.push(match d.is_finite() {
            true => {
                let g = build_family(d)?;
                let system = ClosedSystem::new(&g);
                Some((g, system))
            }
            false => None,
        });
    }

    let rows: Vec<SurveyRow> = pool()?.install(|| {
        cells
            .par_iter()
            .map(|&(i, n, k)| -> Result<SurveyRow> {
                let desc = &descs[i];
                let tv = classify(desc, n, k)?;
                let oracle = match (&graphs[i], desc) {
                    (Some((g, system)), _) => oracle_cell(g, system, n, k, existence_only, &limits, deadline)?,
                    (None, FamilyDescriptor::Tiling(t)) => {
                        let (a, b) = default_quotient(*t);
                        match tiling_quotient_witness(*t, n, k, a, b)? {
                            Some(w) => Verdict::exists(Some(w.order()), None, "quotient"),
                            None => Verdict::unknown("no quotient witness"),
                        }
                    }
                    (None, _) => Verdict::unknown("infinite graph"),
                };
                Ok(SurveyRow {
                    family: desc.family_name().to_string(),
                    params: desc.params(),
                    n,
                    k,
                    theorem: tv.theorem_id.to_string(),
                    classifier: tv.verdict.kind().to_string(),
                    classifier_value: tv.verdict.value(),
                    oracle: oracle.kind().to_string(),
                    oracle_value: oracle.value(),
                    status: cell_status(&tv.verdict, &oracle).to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let failures = rows.iter().filter(|r| r.status == "failure").count();
    if failures > 0 {
        log::warn!("{failures} classifier/oracle disagreement(s)");
    }
    emit(&rows, false, output)?;
    Ok(Status::from_failures(failures > 0))
}

fn frontier_petersen(ms: &str, js: Option<&str>, ns: &str, ks: &str, open_only: bool, caps: &Caps, output: &Output) -> Result<Status> {
    let ms: Vec<usize> = parse_list(ms)?;
    let js: Option<Vec<usize>> = js.map(parse_list).transpose()?;
    let ns: Vec<u64> = parse_list(ns)?;
    if ns.contains(&0) {
        bail!("modulus must be positive");
    }
    let ks: Vec<i64> = parse_list(ks)?;
    let deadline = Deadline::after(caps.time_budget);
    let keep = |_: usize, j: usize| js.as_ref().is_none_or(|js| js.contains(&j));
    let per_m: Vec<Vec<FrontierRecord>> = pool()?.install(|| {
        ms.par_iter()
            .map(|&m| {
                let mut budget = deadline;
                petersen_frontier(&[m], &keep, &ns, &ks, &mut budget)
            })
            .collect::<Result<_, _>>()
    })?;
    let records: Vec<FrontierRecord> = per_m.into_iter().flatten().collect();
    let failures = records.iter().filter(|r| r.is_failure()).count();
    let rows: Vec<FrontierRow> = records
        .iter()
        .filter(|r| !open_only || r.classifier.verdict.is_unknown())
        .map(|r| FrontierRow {
            m: r.m,
            j: r.j,
            n: r.n,
            k: r.k,
            theorem: r.classifier.theorem_id.to_string(),
            classifier: r.classifier.verdict.kind().to_string(),
            oracle: r.oracle.kind().to_string(),
            status: if r.is_failure() {
                "failure"
            } else if r.resolves_open_cell() {
                "resolved"
            } else if r.oracle.is_unknown() {
                "undecided"
            } else {
                "agree"
            }
            .to_string(),
        })
        .collect();
    emit(&rows, false, output)?;
    Ok(Status::from_failures(failures > 0))
}

fn frontier_additivity(input: &Input, ns: &str, caps: &Caps, output: &Output) -> Result<Status> {
    let subject = Subject::from_input(input)?;
    let g = subject.finite_graph()?;
    let ns: Vec<u64> = parse_list(ns)?;
    if ns.contains(&0) {
        bail!("modulus must be positive");
    }
    let limits = caps.limits();
    let cells: Vec<(u64, i64, i64)> =
        ns.iter().flat_map(|&n| (0..n as i64).flat_map(move |k1| (k1..n as i64).map(move |k2| (n, k1, k2)))).collect();
    let rows: Vec<AdditivityRow> = pool()?.install(|| {
        cells
            .par_iter()
            .map(|&(n, k1, k2)| -> Result<AdditivityRow> {
                let r = probe_additivity(g, n, k1, k2, &limits)?;
                let status = match r.subadditive {
                    Some(true) => "subadditive",
                    Some(false) => "violation",
                    None if r.lhs.is_unknown() || r.k1.is_unknown() || r.k2.is_unknown() => "undecided",
                    None => "not-applicable",
                };
                Ok(AdditivityRow {
                    family: subject.family.clone(),
                    params: subject.params.clone(),
                    n,
                    k1,
                    k2,
                    sum: r.lhs.kind().to_string(),
                    sum_value: r.lhs.value(),
                    k1_value: r.k1.value(),
                    k2_value: r.k2.value(),
                    rhs_sum: r.rhs_sum,
                    status: status.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let violations = rows.iter().filter(|r| r.status == "violation").count();
    if violations > 0 {
        log::warn!("{violations} pair(s) exceed the sum of the parts");
    }
    emit(&rows, false, output)?;
    Ok(Status::Completed)
}

fn frontier_ieds(input: &Input, ns: &str, caps: &Caps, output: &Output) -> Result<Status> {
    let subject = Subject::from_input(input)?;
    let g = subject.finite_graph()?;
    let ns: Vec<u64> = parse_list(ns)?;
    if ns.contains(&0) {
        bail!("modulus must be positive");
    }
    let limits = caps.limits();
    let chi = exact_chromatic_number(g, limits.chromatic_bound)?;
    let set = find_ieds(g, limits.ieds_bound)?;
    let cells: Vec<(u64, i64)> = ns.iter().flat_map(|&n| (0..n as i64).map(move |k| (n, k))).collect();
    let deadline = Deadline::after(caps.time_budget);
    let rows: Vec<IedsRow> = pool()?.install(|| {
        cells
            .par_iter()
            .map(|&(n, k)| -> Result<IedsRow> {
                let mut budget = deadline;
                let v = closed_chromatic_number_with_budget(g, n, k, &limits, &mut budget)?;
                let status = match (v.existence(), v.value()) {
                    (Some(false), _) => "not-exists",
                    (Some(true), Some(x)) if x == chi || x == chi + 1 => "within",
                    (Some(true), Some(_)) => "beyond",
                    _ => "undecided",
                };
                Ok(IedsRow {
                    family: subject.family.clone(),
                    params: subject.params.clone(),
                    ieds: set.clone(),
                    chi,
                    n,
                    k,
                    verdict: v.kind().to_string(),
                    value: v.value(),
                    status: status.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;
    // With an IEDS every value must lie in {χ, χ + 1}.
    let failures = set.is_some() && rows.iter().any(|r| r.status == "beyond" || r.status == "not-exists");
    emit(&rows, false, output)?;
    Ok(Status::from_failures(failures))
}

fn ieds(input: &Input, n: Option<u64>, k: Option<i64>, caps: &Caps, output: &Output) -> Result<Status> {
    let subject = Subject::from_input(input)?;
    let g = subject.finite_graph()?;
    let limits = caps.limits();
    let set = find_ieds(g, limits.ieds_bound)?;
    let mut report = IedsReport {
        family: subject.family.clone(),
        params: subject.params.clone(),
        ieds: set.clone(),
        source: SOURCE_IEDS.to_string(),
        n,
        k,
        coloring: None,
        order: None,
        valid: None,
    };
    let mut status = Status::Completed;
    if let (Some(u), Some(n), Some(k)) = (&set, n, k) {
        if n == 0 {
            bail!("modulus must be positive");
        }
        let l = coloring_from_ieds(g, u, n, k, limits.chromatic_bound)?;
        let r = verify_labeling(g, &l, n, k)?;
        status = Status::from_failures(!r.is_valid());
        report.order = Some(r.order);
        report.valid = Some(r.is_valid());
        report.coloring = Some(l.into_values());
    }
    emit(&[report], true, output)?;
    Ok(status)
}
