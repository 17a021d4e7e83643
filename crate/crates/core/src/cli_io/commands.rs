use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::metrics::{Metric, Value};
use crate::reductions::{
    gen_hitting_set, hamming_to_ulam, hsc_to_lp, make_edit_codec, pad_facilities_edit, GenMode,
};
use crate::solvers::{
    brute_force_solve, l1_center, l1_diameter, linf_center, EditSpace, MetricSpace, Objective, PermutationSet,
    PointSet, Solution, StringSet, UlamSpace, DEFAULT_DIM_CAP,
};
use crate::ulam_center::ulam_center_approx;

use super::format::{InstanceFile, Meta, Payload};
use super::generate::{random_binary_strings, random_bits, random_permutations, random_points};
use super::record::ResultRecord;
use super::{Algo, Gadget, GenArgs, HscMode, SolveArgs, SolveOpts, VerifyArgs, EXIT_OK, EXIT_VERIFY_FAIL};

/// Default slack when ulam-approx is requested without `--eps`.
const DEFAULT_EPS: f64 = 0.1;

/// A solvable instance with its metric resolved.
#[derive(Debug, Clone, PartialEq)]
pub enum Instance {
    Points(PointSet),
    Permutations(PermutationSet, Metric),
    Strings(StringSet),
}

impl Instance {
    /// Takes the metric from `metric` if given, else from the file.
    pub fn from_file(file: &InstanceFile, metric: Option<&str>) -> Result<Instance> {
        let metric = metric.map(str::parse::<Metric>).transpose()?;
        match (&file.payload, metric) {
            (Payload::Points(p), None) => Ok(Instance::Points(p.clone())),
            (Payload::Points(p), Some(m)) => Ok(Instance::Points(p.with_metric(m)?)),
            (Payload::Permutations(p), None) => Ok(Instance::Permutations(p.clone(), Metric::Ulam)),
            (Payload::Permutations(p), Some(m @ (Metric::Ulam | Metric::UlamMoves))) => {
                Ok(Instance::Permutations(p.clone(), m))
            }
            (Payload::Strings(s), None | Some(Metric::Edit)) => Ok(Instance::Strings(s.clone())),
            (Payload::HittingSet(_), _) => Err(Error::InvalidParameter(
                "hitting-set files have no metric; generate an hsc-lp instance instead".into(),
            )),
            (_, Some(m)) => Err(Error::InvalidMetric(format!("{m} does not apply to this instance kind"))),
        }
    }

    pub fn metric(&self) -> Metric {
        match self {
            Instance::Points(p) => p.metric(),
            Instance::Permutations(_, m) => *m,
            Instance::Strings(_) => Metric::Edit,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Instance::Points(p) => p.len(),
            Instance::Permutations(p, _) => p.len(),
            Instance::Strings(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn space(&self) -> Result<Box<dyn MetricSpace + '_>> {
        Ok(match self {
            Instance::Points(p) => Box::new(p),
            Instance::Permutations(p, m) => Box::new(UlamSpace::new(p, *m)?),
            Instance::Strings(s) => Box::new(EditSpace::new(s)),
        })
    }
}

impl<T: MetricSpace> MetricSpace for &T {
    fn len(&self) -> usize {
        (**self).len()
    }

    fn metric(&self) -> Metric {
        (**self).metric()
    }

    fn distance_key(&self, i: usize, j: usize) -> Value {
        (**self).distance_key(i, j)
    }

    fn distance(&self, i: usize, j: usize) -> Value {
        (**self).distance(i, j)
    }
}

fn incompatible(algo: Algo, why: &str) -> Error {
    Error::InvalidParameter(format!("--algo {} {why}", algo.name()))
}

/// Resolves `auto` and checks that an explicit choice fits the instance.
pub fn select_algorithm(algo: Algo, inst: &Instance, objective: Objective, eps: Option<f64>) -> Result<Algo> {
    let l1_ok = |p: &PointSet| p.metric().is_l1() && p.is_integer() && p.dim() <= DEFAULT_DIM_CAP;
    match algo {
        Algo::Auto => Ok(match inst {
            Instance::Points(p) if l1_ok(p) && objective != Objective::Median => Algo::L1Fast,
            Instance::Points(p) if p.metric() == Metric::Linf && objective == Objective::Center => Algo::LinfFast,
            Instance::Permutations(..) if objective == Objective::Center && eps.is_some() => Algo::UlamApprox,
            _ => Algo::Brute,
        }),
        Algo::L1Fast => match inst {
            Instance::Points(p) if !p.metric().is_l1() => Err(incompatible(algo, "needs the l1 metric")),
            Instance::Points(p) if !p.is_integer() => Err(incompatible(algo, "needs integer coordinates")),
            Instance::Points(p) if p.dim() > DEFAULT_DIM_CAP => {
                Err(incompatible(algo, &format!("supports dimension at most {DEFAULT_DIM_CAP}")))
            }
            Instance::Points(_) if objective == Objective::Median => Err(incompatible(algo, "has no median")),
            Instance::Points(_) => Ok(algo),
            _ => Err(incompatible(algo, "needs points")),
        },
        Algo::LinfFast => match inst {
            Instance::Points(p) if p.metric() == Metric::Linf && objective == Objective::Center => Ok(algo),
            _ => Err(incompatible(algo, "needs linf points and the center objective")),
        },
        Algo::UlamApprox => match inst {
            Instance::Permutations(..) if objective == Objective::Center => Ok(algo),
            _ => Err(incompatible(algo, "needs permutations and the center objective")),
        },
        Algo::Brute => Ok(algo),
    }
}

fn scale(v: Value, k: i128) -> Value {
    match v {
        Value::Int(x) => Value::Int(k * x),
        Value::Real(x) => Value::Real(k as f64 * x),
    }
}

/// Runs a concrete (already selected) algorithm.
pub fn run_algorithm(algo: Algo, inst: &Instance, objective: Objective, eps: Option<f64>) -> Result<Solution> {
    match (algo, inst) {
        (Algo::L1Fast, Instance::Points(p)) => Ok(match objective {
            Objective::Diameter => Solution::Diameter(l1_diameter(p)?),
            _ => Solution::Center(l1_center(p)?),
        }),
        (Algo::LinfFast, Instance::Points(p)) => Ok(Solution::Center(linf_center(p)?)),
        (Algo::UlamApprox, Instance::Permutations(p, metric)) => {
            let mut r = ulam_center_approx(p, eps.unwrap_or(DEFAULT_EPS))?;
            // The approximation works in moves; Ulam proper counts insertions
            // and deletions.
            if *metric == Metric::Ulam {
                r.radius = scale(r.radius, 2);
                if let Some(e) = r.eccentricities.as_mut() {
                    e.iter_mut().for_each(|v| *v = scale(*v, 2));
                }
            }
            Ok(Solution::Center(r))
        }
        (Algo::Brute, _) => brute_force_solve(&*inst.space()?, objective),
        (Algo::Auto, _) => run_algorithm(select_algorithm(algo, inst, objective, eps)?, inst, objective, eps),
        _ => Err(incompatible(algo, "does not fit this instance")),
    }
}

fn check_eps(eps: Option<f64>) -> Result<()> {
    match eps {
        Some(e) if !(e.is_finite() && e > 0.0) => Err(Error::InvalidParameter(format!("--eps {e} must be positive"))),
        _ => Ok(()),
    }
}

fn prepare(path: &std::path::Path, opts: &SolveOpts) -> Result<(Instance, Objective, Algo)> {
    check_eps(opts.eps)?;
    let objective: Objective = opts.objective.parse()?;
    let file = InstanceFile::read_path(path)?;
    let inst = Instance::from_file(&file, opts.metric.as_deref())?;
    let algo = select_algorithm(opts.algo, &inst, objective, opts.eps)?;
    Ok((inst, objective, algo))
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1e3)
}

pub(super) fn solve(args: &SolveArgs, out: &mut dyn Write) -> Result<i32> {
    let (inst, objective, algo) = prepare(&args.input, &args.opts)?;
    let (sol, ms) = timed(|| run_algorithm(algo, &inst, objective, args.opts.eps));
    let record = ResultRecord::from_solution(&sol?, algo.name(), inst.metric(), inst.len(), ms);
    writeln!(out, "{}", serde_json::to_string(&record).map_err(|e| Error::Io(e.to_string()))?)?;
    Ok(EXIT_OK)
}

fn objective_value(sol: &Solution) -> Value {
    match sol {
        Solution::Center(c) => c.radius,
        Solution::Median(m) => m.cost,
        Solution::Diameter(d) => d.value,
    }
}

/// Pass/fail of one algorithm run against the oracle, with a short reason.
fn check_against_oracle(algo: Algo, sol: &Solution, oracle: &Solution, eps: f64) -> (bool, String) {
    let (got, want) = (objective_value(sol), objective_value(oracle));
    if algo != Algo::UlamApprox {
        return (got == want, format!("value={got} oracle={want}"));
    }
    let (Solution::Center(c), Solution::Center(o)) = (sol, oracle) else {
        return (false, "not a center result".into());
    };
    let true_ecc = o.eccentricities.as_ref().map_or(want, |e| e[c.index]);
    let bound = (1.0 + eps) * want.as_f64();
    let mut ok = true_ecc.as_f64() <= bound && got.as_f64() <= bound && got >= want;
    if c.diagnostics.get("regime").map(String::as_str) == Some("low") {
        ok &= got == want;
    }
    (ok, format!("value={got} true_eccentricity={true_ecc} oracle={want} bound={bound}"))
}

pub(super) fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let mut passed = 0;
    for path in &args.inputs {
        let (inst, objective, algo) = prepare(path, &args.opts)?;
        let sol = run_algorithm(algo, &inst, objective, args.opts.eps)?;
        let oracle = run_algorithm(Algo::Brute, &inst, objective, None)?;
        let (ok, detail) = check_against_oracle(algo, &sol, &oracle, args.opts.eps.unwrap_or(DEFAULT_EPS));
        passed += usize::from(ok);
        writeln!(
            out,
            "{} {} algo={} objective={objective} {detail}",
            if ok { "PASS" } else { "FAIL" },
            path.display(),
            algo.name()
        )?;
    }
    let total = args.inputs.len();
    writeln!(out, "verify: {passed}/{total} passed")?;
    Ok(if passed == total { EXIT_OK } else { EXIT_VERIFY_FAIL })
}

fn value_name(v: &impl clap::ValueEnum) -> String {
    v.to_possible_value().map_or_else(String::new, |p| p.get_name().to_string())
}

fn parse_bits(rows: &[String]) -> Result<Vec<Vec<bool>>> {
    let bits: Vec<Vec<bool>> = rows
        .iter()
        .map(|r| {
            r.chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(Error::InvalidParameter(format!("--bits '{r}' is not a 0/1 string"))),
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    if bits.iter().any(|b| b.len() != bits[0].len()) {
        return Err(Error::InvalidParameter("--bits vectors differ in length".into()));
    }
    Ok(bits)
}

/// Builds the instance described by `args`.
pub fn build_instance(args: &GenArgs) -> Result<InstanceFile> {
    let mut params = BTreeMap::new();
    let mut put = |k: &str, v: String| {
        params.insert(k.to_string(), v);
    };
    let mut meta = Meta { seed: Some(args.seed), ..Meta::default() };
    let hsc = || {
        let mode = match args.mode {
            HscMode::Random => GenMode::Random { density: args.density },
            HscMode::Yes => GenMode::PlantedYes,
            HscMode::No => GenMode::PlantedNo,
        };
        gen_hitting_set(args.n, args.m, mode, args.seed)
    };
    let vectors = || -> Result<Vec<Vec<bool>>> {
        if args.bits.is_empty() {
            Ok(random_bits(args.n, args.dim, args.seed))
        } else {
            parse_bits(&args.bits)
        }
    };
    let payload = match args.gadget {
        Gadget::Hsc | Gadget::HscLp => {
            let inst = hsc()?;
            put("n", args.n.to_string());
            put("m", args.m.to_string());
            put("mode", value_name(&args.mode));
            if args.mode == HscMode::Random {
                put("density", args.density.to_string());
            }
            meta.planted_answer = inst.planted_answer;
            if args.gadget == Gadget::Hsc {
                Payload::HittingSet(inst)
            } else {
                let gadget = hsc_to_lp(&inst, args.metric.parse()?)?;
                put("n_a", gadget.n_a.to_string());
                put("n_b", gadget.n_b.to_string());
                put("special_index", gadget.special_index().to_string());
                meta.thresholds = Some([gadget.yes_threshold, gadget.no_threshold]);
                Payload::Points(gadget.points)
            }
        }
        Gadget::Ham2ulam => {
            let vs = vectors()?;
            put("dim", vs.first().map_or(0, Vec::len).to_string());
            Payload::Permutations(PermutationSet::new(vs.iter().map(|v| hamming_to_ulam(v)).collect())?)
        }
        Gadget::Ham2edit => {
            let vs = vectors()?;
            let codec = make_edit_codec(vs.first().map_or(0, Vec::len), args.seed)?;
            put("dim", codec.d.to_string());
            put("block_len", codec.block_len.to_string());
            put("separation", codec.separation().to_string());
            put("codec_seed", codec.effective_seed.to_string());
            Payload::Strings(StringSet::new(vs.iter().map(|v| codec.encode(v)).collect::<Result<_>>()?)?)
        }
        Gadget::PadEdit => {
            let mut all = random_binary_strings(args.n_facilities + args.n_clients, args.m, args.seed);
            let clients = all.split_off(args.n_facilities);
            let padded = pad_facilities_edit(&all, &clients)?;
            put("m", args.m.to_string());
            put("n_facilities", padded.n_facilities.to_string());
            put("n_clients", padded.n_clients.to_string());
            put("sink_index", padded.sink_index().to_string());
            Payload::Strings(StringSet::new(padded.strings)?)
        }
        Gadget::RandomPoints => {
            put("n", args.n.to_string());
            put("dim", args.dim.to_string());
            put("range", args.range.to_string());
            Payload::Points(random_points(args.n, args.dim, args.range, args.real, args.metric.parse()?, args.seed)?)
        }
        Gadget::RandomPerms => {
            put("n", args.n.to_string());
            put("dim", args.dim.to_string());
            if let Some(k) = args.moves {
                put("moves", k.to_string());
            }
            Payload::Permutations(random_permutations(args.n, args.dim, args.moves, args.seed)?)
        }
    };
    meta.generator = Some(value_name(&args.gadget));
    meta.params = params;
    Ok(InstanceFile::new(payload, meta))
}

pub(super) fn generate(args: &GenArgs, out: &mut dyn Write) -> Result<i32> {
    let file = build_instance(args)?;
    match &args.output {
        Some(path) => file.write_path(path)?,
        None => out.write_all(&file.to_bytes()?)?,
    }
    Ok(EXIT_OK)
}
