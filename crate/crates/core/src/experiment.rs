//! Named, reproducible experiments and their CSV/JSON rendering.
//!
//! Every experiment returns an [`ExperimentResult`]: a table of labelled
//! numeric rows plus the parameters and metadata needed to rerun it. The
//! `qgame` binary is a thin wrapper around [`run_experiment`] and [`emit`].

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Deserialize;
use serde_json::{Map, Number, Value};

use crate::equilibrium::{
    best_response, critical_gamma, gamma_sweep, minority_quantum_search, mixed_ne_family,
    mixed_ne_pair, restricted_ne_search, verify_nash, verify_nash_in, SearchConfig, StrategySpace,
};
use crate::error::{Error, Result};
use crate::games::{
    classical_random_payoff, find_dominant_strategies, find_pure_nash, minority_game, miracle_move,
    pareto_optimal_outcomes, play_penny_flip, prisoners_dilemma, ClassicalMatrix, ClassicalMove,
    PennyFlipMoves,
};
use crate::operators::{
    classical_mix, flip, hadamard, identity, su2, EntanglementParam, Su2Params,
};
use crate::protocol::{
    ensemble_expected_payoffs, run, run_eisert_noisy, GameSpec, StrategyProfile,
};
use crate::qstate::{outcome_probabilities, StateVector};
use crate::{ComplexAmp, Unitary, Variant, EPS_OPT, EPS_PROB, EPS_UNITARY, NE_TOL};

/// Names accepted by [`run_experiment`].
pub const EXPERIMENTS: [&str; 12] = [
    "penny-flip",
    "pd",
    "miracle-curve",
    "critical-gamma",
    "gamma-sweep",
    "mixed-ne",
    "restricted-ne",
    "minority",
    "best-response",
    "verify-ne",
    "analyze",
    "noise",
];

/// Inputs shared by all experiments. Unset fields fall back to per-experiment
/// defaults.
#[derive(Clone, Debug, Default)]
pub struct Flags {
    pub gamma: Option<f64>,
    pub alice: Option<Su2Params>,
    pub bob: Option<Su2Params>,
    pub seed: u64,
    pub game: Option<GameSpec>,
    pub points: Option<usize>,
    pub players: Option<usize>,
    pub quantum: bool,
}

/// Output format for [`emit`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub label: String,
    pub values: Vec<f64>,
}

/// A finished experiment. Rows are non-empty and every value is finite.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentResult {
    experiment: String,
    params: Vec<(String, Value)>,
    columns: Vec<String>,
    rows: Vec<Row>,
    seed: u64,
}

impl ExperimentResult {
    fn new(
        experiment: &str,
        params: Vec<(String, Value)>,
        columns: &[&str],
        rows: Vec<Row>,
        seed: u64,
    ) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Empty("experiment rows"));
        }
        for row in &rows {
            if row.values.len() != columns.len() {
                return Err(Error::DimensionMismatch {
                    expected: columns.len(),
                    got: row.values.len(),
                });
            }
            if let Some(i) = row.values.iter().position(|v| !v.is_finite()) {
                return Err(Error::Output(format!(
                    "row `{}` column `{}` is not finite",
                    row.label, columns[i]
                )));
            }
        }
        Ok(ExperimentResult {
            experiment: experiment.to_string(),
            params,
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows,
            seed,
        })
    }

    pub fn experiment(&self) -> &str {
        &self.experiment
    }

    pub fn params(&self) -> &[(String, Value)] {
        &self.params
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    /// Value in the row labelled `label` under `column`.
    pub fn value(&self, label: &str, column: &str) -> Option<f64> {
        let c = self.columns.iter().position(|x| x == column)?;
        self.rows
            .iter()
            .find(|r| r.label == label)
            .map(|r| r.values[c])
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// Runs a named experiment.
pub fn run_experiment(name: &str, flags: &Flags) -> Result<ExperimentResult> {
    match name {
        "penny-flip" => penny_flip(flags),
        "pd" => pd(flags),
        "miracle-curve" => miracle_curve(flags),
        "critical-gamma" => critical(flags),
        "gamma-sweep" => sweep(flags),
        "mixed-ne" => mixed_ne(flags),
        "restricted-ne" => restricted(flags),
        "minority" => minority(flags),
        "best-response" => best_responses(flags),
        "verify-ne" => verify(flags),
        "analyze" => analyze(flags),
        "noise" => noise(flags),
        other => Err(Error::UnknownExperiment {
            name: other.to_string(),
            available: EXPERIMENTS.join(", "),
        }),
    }
}

/// Renders a result as CSV (header `label,<columns>`) or as a JSON object
/// with keys `experiment`, `params`, `rows` and `metadata`. Numbers are
/// rounded to 12 significant digits.
pub fn emit(result: &ExperimentResult, format: Format) -> Result<String> {
    match format {
        Format::Csv => emit_csv(result),
        Format::Json => emit_json(result),
    }
}

fn round12(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

fn render(x: f64) -> String {
    if x != 0.0 && !(1e-4..1e15).contains(&x.abs()) {
        format!("{x:e}")
    } else {
        x.to_string()
    }
}

fn emit_csv(result: &ExperimentResult) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let out = |e: csv::Error| Error::Output(e.to_string());
    w.write_record(std::iter::once("label").chain(result.columns.iter().map(String::as_str)))
        .map_err(out)?;
    for row in &result.rows {
        let mut rec = vec![row.label.clone()];
        rec.extend(row.values.iter().map(|&v| render(round12(v))));
        w.write_record(&rec).map_err(out)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Output(e.to_string()))
}

fn number(x: f64) -> Value {
    Number::from_f64(round12(x)).map_or(Value::Null, Value::Number)
}

fn emit_json(result: &ExperimentResult) -> Result<String> {
    let params: Map<String, Value> = result.params.iter().cloned().collect();
    let rows: Vec<Value> = result
        .rows
        .iter()
        .map(|r| {
            let mut obj = Map::new();
            obj.insert("label".into(), Value::String(r.label.clone()));
            for (c, &v) in result.columns.iter().zip(&r.values) {
                obj.insert(c.clone(), number(v));
            }
            Value::Object(obj)
        })
        .collect();
    let tolerances: Map<String, Value> = [
        ("eps_prob", EPS_PROB),
        ("eps_unitary", EPS_UNITARY),
        ("eps_opt", EPS_OPT),
        ("ne_tol", NE_TOL),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), number(v)))
    .collect();
    let mut metadata = Map::new();
    metadata.insert("seed".into(), Value::from(result.seed));
    metadata.insert("tolerances".into(), Value::Object(tolerances));
    metadata.insert("version".into(), Value::from(env!("CARGO_PKG_VERSION")));

    let mut top = Map::new();
    top.insert("experiment".into(), Value::from(result.experiment.clone()));
    top.insert("params".into(), Value::Object(params));
    top.insert("rows".into(), Value::Array(rows));
    top.insert("metadata".into(), Value::Object(metadata));
    serde_json::to_string_pretty(&Value::Object(top))
        .map(|s| s + "\n")
        .map_err(|e| Error::Output(e.to_string()))
}

/// Parses `"θ,α,β"` in radians.
pub fn parse_angles(flag: &'static str, text: &str) -> Result<Su2Params> {
    let bad = |reason: String| Error::InvalidFlag { flag, reason };
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(bad(format!("expected theta,alpha,beta, got `{text}`")));
    }
    let mut v = [0.0; 3];
    for (slot, p) in v.iter_mut().zip(&parts) {
        *slot = p
            .parse()
            .map_err(|_| bad(format!("`{p}` is not a number")))?;
    }
    Su2Params::new(v[0], v[1], v[2]).map_err(|e| bad(e.to_string()))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGame {
    players: usize,
    moves: Vec<usize>,
    payoffs: Vec<Vec<f64>>,
    variant: String,
    gamma: Option<f64>,
    initial_state: Option<Vec<[f64; 2]>>,
}

/// Slack above `π/2` accepted for `gamma`, so that a rounded `1.5708` reads
/// as maximal entanglement.
const GAMMA_SLACK: f64 = 1e-4;

/// Parses a JSON game description.
///
/// Keys: `players`, `moves` (one count per player), `payoffs` (one array of
/// per-player payoffs per outcome, row-major with player 1 slowest),
/// `variant` (`"eisert"` or `"marinatto_weber"`), `gamma` (required for
/// `eisert`) and, for `marinatto_weber`, an optional `initial_state` of
/// `[re, im]` pairs defaulting to `|0…0⟩`.
pub fn parse_game_file(text: &str) -> Result<GameSpec> {
    let raw: RawGame = serde_json::from_str(text).map_err(|e| Error::GameFile(e.to_string()))?;
    let bad = |key: &str, msg: String| Error::GameFile(format!("`{key}`: {msg}"));

    if raw.moves.len() != raw.players {
        return Err(bad(
            "moves",
            format!(
                "expected {} entries (one per player), got {}",
                raw.players,
                raw.moves.len()
            ),
        ));
    }
    let outcomes: usize = raw.moves.iter().product();
    if raw.payoffs.len() != outcomes {
        return Err(bad(
            "payoffs",
            format!(
                "expected {outcomes} entries (one per outcome), got {}",
                raw.payoffs.len()
            ),
        ));
    }
    if let Some(i) = raw.payoffs.iter().position(|p| p.len() != raw.players) {
        return Err(bad(
            "payoffs",
            format!(
                "entry {i} has {} values, expected {}",
                raw.payoffs[i].len(),
                raw.players
            ),
        ));
    }
    let matrix = ClassicalMatrix::new(raw.moves.clone(), raw.payoffs)
        .map_err(|e| bad("payoffs", e.to_string()))?;

    match raw.variant.as_str() {
        "eisert" => {
            let g = raw
                .gamma
                .ok_or_else(|| bad("gamma", "required for variant `eisert`".into()))?;
            if !(0.0..=FRAC_PI_2 + GAMMA_SLACK).contains(&g) {
                return Err(bad("gamma", format!("{g} outside [0, π/2]")));
            }
            if raw.initial_state.is_some() {
                return Err(bad(
                    "initial_state",
                    "only used by `marinatto_weber`".into(),
                ));
            }
            let gamma = EntanglementParam::new(g.min(FRAC_PI_2)).expect("checked range");
            GameSpec::eisert(matrix, gamma).map_err(|e| bad("moves", e.to_string()))
        }
        "marinatto_weber" => {
            let state = match raw.initial_state {
                None => StateVector::basis(raw.moves.clone(), 0)
                    .map_err(|e| bad("moves", e.to_string()))?,
                Some(pairs) => {
                    if pairs.len() != outcomes {
                        return Err(bad(
                            "initial_state",
                            format!("expected {outcomes} amplitudes, got {}", pairs.len()),
                        ));
                    }
                    let amps = pairs
                        .iter()
                        .map(|&[re, im]| ComplexAmp::new(re, im))
                        .collect();
                    StateVector::new(raw.moves.clone(), amps)
                        .map_err(|e| bad("initial_state", e.to_string()))?
                }
            };
            GameSpec::marinatto_weber(matrix, state)
                .map_err(|e| bad("initial_state", e.to_string()))
        }
        other => Err(bad(
            "variant",
            format!("unknown `{other}`; expected `eisert` or `marinatto_weber`"),
        )),
    }
}

fn row(label: impl Into<String>, values: Vec<f64>) -> Row {
    Row {
        label: label.into(),
        values,
    }
}

fn angles_value(p: &Su2Params) -> Value {
    Value::Array(vec![number(p.theta()), number(p.alpha()), number(p.beta())])
}

fn param(key: &str, v: Value) -> (String, Value) {
    (key.to_string(), v)
}

fn cfg(flags: &Flags) -> SearchConfig {
    SearchConfig::with_seed(flags.seed)
}

fn gamma_of(flags: &Flags) -> Result<EntanglementParam> {
    EntanglementParam::new(flags.gamma.unwrap_or(FRAC_PI_2)).map_err(|e| Error::InvalidFlag {
        flag: "--gamma",
        reason: e.to_string(),
    })
}

/// The game to play: the file if given (with `--gamma` overriding its
/// entanglement), else the prisoners' dilemma.
fn game_of(flags: &Flags) -> Result<GameSpec> {
    match &flags.game {
        Some(spec) => match (flags.gamma, spec.variant()) {
            (Some(_), Variant::EisertFull { .. }) => spec.with_gamma(gamma_of(flags)?),
            _ => Ok(spec.clone()),
        },
        None => GameSpec::eisert(prisoners_dilemma(), gamma_of(flags)?),
    }
}

fn game_params(flags: &Flags, spec: &GameSpec) -> Vec<(String, Value)> {
    let source = if flags.game.is_some() {
        "file"
    } else {
        "prisoners_dilemma"
    };
    let mut out = vec![param("game", Value::from(source))];
    if let Some(g) = spec.gamma() {
        out.push(param("gamma", number(g.gamma())));
    }
    out
}

fn two_qubit(spec: &GameSpec, what: &str) -> Result<()> {
    if spec.moves() != [2, 2] {
        return Err(Error::Unsupported(format!(
            "{what} needs a two-player qubit game, got moves {:?}",
            spec.moves()
        )));
    }
    Ok(())
}

fn points(flags: &Flags, default: usize) -> Result<usize> {
    let n = flags.points.unwrap_or(default);
    if n < 2 {
        return Err(Error::InvalidFlag {
            flag: "--points",
            reason: format!("need at least 2, got {n}"),
        });
    }
    Ok(n)
}

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| {
        if i + 1 == n {
            hi
        } else {
            lo + (hi - lo) * i as f64 / (n - 1) as f64
        }
    })
}

fn defaulted(p: Option<Su2Params>, theta: f64, alpha: f64) -> Su2Params {
    p.unwrap_or_else(|| Su2Params::new(theta, alpha, 0.0).expect("in range"))
}

fn penny_flip(flags: &Flags) -> Result<ExperimentResult> {
    let bob = [("I", identity(2)?), ("F", flip()), ("H", hadamard())];
    let mut rows = Vec::new();
    for (n1, b1) in &bob {
        for (n2, b2) in &bob {
            let play = |alice| {
                play_penny_flip(&PennyFlipMoves {
                    bob1: b1.clone(),
                    alice,
                    bob2: b2.clone(),
                })
            };
            let keep = play(ClassicalMove::Identity)?;
            let flipped = play(ClassicalMove::Flip)?;
            rows.push(row(format!("{n1}-I-{n2}"), vec![keep]));
            rows.push(row(format!("{n1}-F-{n2}"), vec![flipped]));
            rows.push(row(format!("{n1}-R-{n2}"), vec![0.5 * (keep + flipped)]));
        }
    }
    ExperimentResult::new("penny-flip", vec![], &["win_prob"], rows, flags.seed)
}

fn pd(flags: &Flags) -> Result<ExperimentResult> {
    let spec = game_of(flags)?;
    two_qubit(&spec, "pd")?;
    let alice = defaulted(flags.alice, 0.0, 0.0);
    let bob = defaulted(flags.bob, 0.0, 0.0);
    let fin = run(&spec, &[su2(&alice), su2(&bob)])?;
    let probs = outcome_probabilities(&fin);
    let m = spec.matrix();
    let mut rows: Vec<Row> = probs
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let label: String = m.outcome_of(i).iter().map(|c| c.to_string()).collect();
            let pay = m.payoffs_at(i);
            row(format!("outcome_{label}"), vec![p, pay[0], pay[1]])
        })
        .collect();
    let expected = m.expected(&probs)?;
    rows.push(row("expected", vec![1.0, expected[0], expected[1]]));
    let mut params = game_params(flags, &spec);
    params.push(param("alice", angles_value(&alice)));
    params.push(param("bob", angles_value(&bob)));
    ExperimentResult::new(
        "pd",
        params,
        &["probability", "payoff_1", "payoff_2"],
        rows,
        flags.seed,
    )
}

fn miracle_curve(flags: &Flags) -> Result<ExperimentResult> {
    let spec = game_of(flags)?;
    two_qubit(&spec, "miracle-curve")?;
    let n = points(flags, 21)?;
    let game = spec.prepare()?;
    let m = miracle_move();
    let mut rows = Vec::with_capacity(n);
    for (i, theta) in linspace(0.0, PI, n).enumerate() {
        let p = game.pure_payoffs(&[&classical_mix(theta)?, &m])?;
        rows.push(row(i.to_string(), vec![theta, p[0], p[1]]));
    }
    let mut params = game_params(flags, &spec);
    params.push(param("points", Value::from(n)));
    ExperimentResult::new(
        "miracle-curve",
        params,
        &["theta", "alice_payoff", "bob_payoff"],
        rows,
        flags.seed,
    )
}

fn critical(flags: &Flags) -> Result<ExperimentResult> {
    let spec = game_of(flags)?;
    let g = critical_gamma(&spec, &cfg(flags))?;
    let params = vec![param(
        "game",
        Value::from(if flags.game.is_some() {
            "file"
        } else {
            "prisoners_dilemma"
        }),
    )];
    ExperimentResult::new(
        "critical-gamma",
        params,
        &["gamma_star"],
        vec![row("critical", vec![g])],
        flags.seed,
    )
}

fn sweep(flags: &Flags) -> Result<ExperimentResult> {
    let spec = game_of(flags)?;
    two_qubit(&spec, "gamma-sweep")?;
    if spec.gamma().is_none() {
        return Err(Error::Unsupported(
            "gamma-sweep needs an entangled game".into(),
        ));
    }
    let n = points(flags, 21)?;
    let alice = defaulted(flags.alice, PI, 0.0);
    let bob = defaulted(flags.bob, FRAC_PI_2, FRAC_PI_2);
    let gammas: Vec<f64> = linspace(0.0, FRAC_PI_2, n).collect();
    let rows = gamma_sweep(&spec, &[su2(&alice), su2(&bob)], &gammas)?
        .into_iter()
        .enumerate()
        .map(|(i, (g, p))| row(i.to_string(), vec![g, p[0], p[1]]))
        .collect();
    let params = vec![
        param(
            "game",
            Value::from(if flags.game.is_some() {
                "file"
            } else {
                "prisoners_dilemma"
            }),
        ),
        param("alice", angles_value(&alice)),
        param("bob", angles_value(&bob)),
        param("points", Value::from(n)),
    ];
    ExperimentResult::new(
        "gamma-sweep",
        params,
        &["gamma", "payoff_1", "payoff_2"],
        rows,
        flags.seed,
    )
}

fn report_rows(rows: &mut Vec<Row>, payoffs: &[f64], gains: &[f64], is_nash: bool) {
    rows.push(row("mixed", payoffs.to_vec()));
    rows.push(row("max_gain", gains.to_vec()));
    rows.push(row(
        "is_nash",
        vec![if is_nash { 1.0 } else { 0.0 }; payoffs.len()],
    ));
}

fn mixed_ne(flags: &Flags) -> Result<ExperimentResult> {
    let spec = GameSpec::eisert(prisoners_dilemma(), EntanglementParam::maximal())?;
    let (profile, mut params) = match flags.alice {
        Some(a) => (
            mixed_ne_family(a.theta(), a.alpha(), a.beta())?,
            vec![param("family", angles_value(&a))],
        ),
        None => (mixed_ne_pair(), vec![]),
    };
    params.push(param("gamma", number(FRAC_PI_2)));
    let game = spec.prepare()?;
    let mut rows = Vec::new();
    let alice = profile.strategy(0).components();
    let bob = profile.strategy(1).components();
    for (i, (_, a)) in alice.iter().enumerate() {
        for (j, (_, b)) in bob.iter().enumerate() {
            rows.push(row(
                format!("A{}-B{}", i + 1, j + 1),
                game.pure_payoffs(&[a, b])?,
            ));
        }
    }
    let report = verify_nash(&spec, &profile, &cfg(flags))?;
    report_rows(
        &mut rows,
        &report.payoffs,
        &report.max_unilateral_gain,
        report.is_nash,
    );
    ExperimentResult::new(
        "mixed-ne",
        params,
        &["player_1", "player_2"],
        rows,
        flags.seed,
    )
}

fn restricted(flags: &Flags) -> Result<ExperimentResult> {
    let spec = game_of(flags)?;
    let c = cfg(flags);
    let report = restricted_ne_search(&spec, &c)?;
    let full = verify_nash(&spec, &report.profile, &c)?;
    let mut rows = Vec::new();
    for p in 0..2 {
        let u = match &report.profile.strategies()[p] {
            crate::Strategy::Pure(u) => u,
            crate::Strategy::Mixed(_) => unreachable!("search returns pure profiles"),
        };
        let s = Su2Params::from_unitary(u)
            .ok_or_else(|| Error::SearchFailed("strategy left the SU(2) chart".into()))?;
        rows.push(row(
            format!("player_{}", p + 1),
            vec![
                s.theta(),
                s.alpha(),
                s.beta(),
                report.payoffs[p],
                report.max_unilateral_gain[p],
                full.max_unilateral_gain[p],
                if report.is_nash { 1.0 } else { 0.0 },
            ],
        ));
    }
    ExperimentResult::new(
        "restricted-ne",
        game_params(flags, &spec),
        &[
            "theta",
            "alpha",
            "beta",
            "payoff",
            "gain_beta_zero",
            "gain_full",
            "is_nash_beta_zero",
        ],
        rows,
        flags.seed,
    )
}

fn minority(flags: &Flags) -> Result<ExperimentResult> {
    let n = flags.players.unwrap_or(4);
    let max = if flags.quantum { 6 } else { 12 };
    if !(3..=max).contains(&n) {
        return Err(Error::InvalidFlag {
            flag: "--players",
            reason: format!("expected 3 to {max}, got {n}"),
        });
    }
    let m = minority_game(n)?;
    let columns: Vec<String> = (1..=n).map(|i| format!("player_{i}")).collect();
    let cols: Vec<&str> = columns.iter().map(String::as_str).collect();
    let mut rows = vec![row("classical_random", classical_random_payoff(&m))];
    if flags.quantum {
        let report = minority_quantum_search(n, &cfg(flags))?;
        rows.push(row("quantum", report.payoffs.clone()));
        rows.push(row("max_gain", report.max_unilateral_gain.clone()));
        rows.push(row(
            "is_nash",
            vec![if report.is_nash { 1.0 } else { 0.0 }; n],
        ));
    }
    let params = vec![
        param("players", Value::from(n)),
        param("quantum", Value::from(flags.quantum)),
        param("gamma", number(FRAC_PI_2)),
    ];
    ExperimentResult::new("minority", params, &cols, rows, flags.seed)
}

fn best_responses(flags: &Flags) -> Result<ExperimentResult> {
    let spec = game_of(flags)?;
    two_qubit(&spec, "best-response")?;
    let alice = defaulted(flags.alice, 0.0, 0.0);
    let bob = defaulted(flags.bob, 0.0, 0.0);
    let profile = StrategyProfile::pure(vec![su2(&alice), su2(&bob)])?;
    let current = spec.prepare()?.profile_payoffs(&profile)?;
    let c = cfg(flags);
    let mut rows = Vec::new();
    for (p, &now) in current.iter().enumerate() {
        let br = best_response(&spec, p, &profile, &c, false)?;
        rows.push(row(
            format!("player_{}", p + 1),
            vec![
                br.params.theta(),
                br.params.alpha(),
                br.params.beta(),
                br.payoff,
                now,
            ],
        ));
    }
    let mut params = game_params(flags, &spec);
    params.push(param("alice", angles_value(&alice)));
    params.push(param("bob", angles_value(&bob)));
    ExperimentResult::new(
        "best-response",
        params,
        &["theta", "alpha", "beta", "best_payoff", "current_payoff"],
        rows,
        flags.seed,
    )
}

fn verify(flags: &Flags) -> Result<ExperimentResult> {
    let (spec, profile, mut params) = if flags.alice.is_none() && flags.bob.is_none() {
        let spec = match &flags.game {
            Some(_) => game_of(flags)?,
            None => GameSpec::eisert(prisoners_dilemma(), gamma_of(flags)?)?,
        };
        (
            spec,
            mixed_ne_pair(),
            vec![param("profile", Value::from("mixed_pair"))],
        )
    } else {
        let spec = game_of(flags)?;
        let alice = defaulted(flags.alice, 0.0, 0.0);
        let bob = defaulted(flags.bob, 0.0, 0.0);
        let profile = StrategyProfile::pure(vec![su2(&alice), su2(&bob)])?;
        let params = vec![
            param("alice", angles_value(&alice)),
            param("bob", angles_value(&bob)),
        ];
        (spec, profile, params)
    };
    two_qubit(&spec, "verify-ne")?;
    params.extend(game_params(flags, &spec));
    let report = verify_nash_in(&spec, &profile, &cfg(flags), StrategySpace::Full)?;
    let rows = (0..2)
        .map(|p| {
            let d = &report.best_deviations[p];
            row(
                format!("player_{}", p + 1),
                vec![
                    report.payoffs[p],
                    report.max_unilateral_gain[p],
                    if report.is_nash { 1.0 } else { 0.0 },
                    d.theta(),
                    d.alpha(),
                    d.beta(),
                ],
            )
        })
        .collect();
    ExperimentResult::new(
        "verify-ne",
        params,
        &[
            "payoff",
            "max_gain",
            "is_nash",
            "deviation_theta",
            "deviation_alpha",
            "deviation_beta",
        ],
        rows,
        flags.seed,
    )
}

fn analyze(flags: &Flags) -> Result<ExperimentResult> {
    let m = match &flags.game {
        Some(spec) => spec.matrix().clone(),
        None => prisoners_dilemma(),
    };
    let n = m.n_players();
    let nash = find_pure_nash(&m);
    let pareto = pareto_optimal_outcomes(&m);
    let mut columns: Vec<String> = (1..=n).map(|i| format!("player_{i}")).collect();
    columns.push("nash".into());
    columns.push("pareto".into());
    let cols: Vec<&str> = columns.iter().map(String::as_str).collect();
    let flag = |b: bool| if b { 1.0 } else { 0.0 };
    let mut rows: Vec<Row> = m
        .outcomes()
        .enumerate()
        .map(|(i, o)| {
            let label: String = o.iter().map(|c| c.to_string()).collect();
            let mut v = m.payoffs_at(i).to_vec();
            v.push(flag(nash.contains(&o)));
            v.push(flag(pareto.contains(&o)));
            row(format!("outcome_{label}"), v)
        })
        .collect();
    let mut dominant: Vec<f64> = find_dominant_strategies(&m)
        .into_iter()
        .map(|d| d.map_or(-1.0, |x| x as f64))
        .collect();
    dominant.extend([0.0, 0.0]);
    rows.push(row("dominant_move", dominant));
    let params = vec![param(
        "game",
        Value::from(if flags.game.is_some() {
            "file"
        } else {
            "prisoners_dilemma"
        }),
    )];
    ExperimentResult::new("analyze", params, &cols, rows, flags.seed)
}

fn noise(flags: &Flags) -> Result<ExperimentResult> {
    let spec = game_of(flags)?;
    two_qubit(&spec, "noise")?;
    if spec.gamma().is_none() {
        return Err(Error::Unsupported("noise needs an entangled game".into()));
    }
    let n = points(flags, 11)?;
    let alice = defaulted(flags.alice, 0.0, FRAC_PI_2);
    let bob = defaulted(flags.bob, 0.0, FRAC_PI_2);
    let moves: Vec<Unitary> = vec![su2(&alice), su2(&bob)];
    let mut rows = Vec::with_capacity(n);
    for (i, p) in linspace(0.0, 1.0, n).enumerate() {
        let ens = run_eisert_noisy(&spec, &moves, p)?;
        let pay = ensemble_expected_payoffs(&spec, &ens)?;
        rows.push(row(i.to_string(), vec![p, pay[0], pay[1]]));
    }
    let mut params = game_params(flags, &spec);
    params.push(param("alice", angles_value(&alice)));
    params.push(param("bob", angles_value(&bob)));
    params.push(param("points", Value::from(n)));
    ExperimentResult::new(
        "noise",
        params,
        &["p", "payoff_1", "payoff_2"],
        rows,
        flags.seed,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    const PD_FILE: &str = r#"{
        "players": 2,
        "moves": [2, 2],
        "payoffs": [[3, 3], [0, 5], [5, 0], [1, 1]],
        "variant": "eisert",
        "gamma": 1.5708
    }"#;

    #[test]
    fn pd_file_reads_as_maximal() {
        let spec = parse_game_file(PD_FILE).unwrap();
        assert_eq!(spec.gamma().unwrap().gamma(), FRAC_PI_2);
        assert_eq!(spec.matrix(), &prisoners_dilemma());
    }

    #[test]
    fn wrong_payoff_count_names_expected() {
        let text = PD_FILE.replace(
            "[[3, 3], [0, 5], [5, 0], [1, 1]]",
            "[[3, 3], [0, 5], [5, 0]]",
        );
        let e = parse_game_file(&text).unwrap_err().to_string();
        assert!(e.contains("payoffs") && e.contains("expected 4"), "{e}");
    }

    #[test]
    fn unnormalized_state_rejected() {
        let text = r#"{"players": 2, "moves": [2, 2],
            "payoffs": [[3, 3], [0, 5], [5, 0], [1, 1]],
            "variant": "marinatto_weber", "gamma": 0,
            "initial_state": [[0.5, 0], [0, 0], [0, 0], [0, 0]]}"#;
        let e = parse_game_file(text).unwrap_err();
        assert!(e.is_usage());
        assert!(
            e.to_string().contains("initial_state") && e.to_string().contains("normalized"),
            "{e}"
        );
    }

    #[test]
    fn missing_key_and_gamma_range() {
        let e =
            parse_game_file(r#"{"players": 2, "moves": [2, 2], "variant": "eisert", "gamma": 1}"#)
                .unwrap_err()
                .to_string();
        assert!(e.contains("payoffs") && e.contains("line"), "{e}");
        let e = parse_game_file(&PD_FILE.replace("1.5708", "2.0"))
            .unwrap_err()
            .to_string();
        assert!(e.contains("gamma"), "{e}");
        let e = parse_game_file(&PD_FILE.replace("1.5708", "-0.1"))
            .unwrap_err()
            .to_string();
        assert!(e.contains("gamma"), "{e}");
    }

    #[test]
    fn unknown_experiment_lists_options() {
        let e = run_experiment("nope", &Flags::default()).unwrap_err();
        assert!(e.is_usage());
        assert!(e.to_string().contains("miracle-curve"));
    }

    #[test]
    fn penny_flip_hadamard_row() {
        let r = run_experiment("penny-flip", &Flags::default()).unwrap();
        for a in ["I", "F", "R"] {
            assert!((r.value(&format!("H-{a}-H"), "win_prob").unwrap() - 1.0).abs() < 1e-12);
        }
        assert!((r.value("I-R-I", "win_prob").unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn miracle_curve_matches_formula() {
        let r = run_experiment("miracle-curve", &Flags::default()).unwrap();
        assert_eq!(r.rows().len(), 21);
        for row in r.rows() {
            let t = row.values[0];
            assert!((row.values[2] - (3.0 + 2.0 * t.sin())).abs() < 1e-9);
            assert!((row.values[1] - (1.0 - t.sin()) / 2.0).abs() < 1e-9);
        }
        let csv = emit(&r, Format::Csv).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("label,theta,alice_payoff,bob_payoff"));
        let first: Vec<f64> = lines
            .next()
            .unwrap()
            .split(',')
            .map(|x| x.parse().unwrap())
            .collect();
        assert_eq!(first[3], 3.0);
    }

    #[test]
    fn json_round_trips() {
        let r = run_experiment("pd", &Flags::default()).unwrap();
        let v: Value = serde_json::from_str(&emit(&r, Format::Json).unwrap()).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["experiment", "params", "rows", "metadata"]);
        let rows = v["rows"].as_array().unwrap();
        assert_eq!(rows.len(), r.rows().len());
        for (json, row) in rows.iter().zip(r.rows()) {
            assert_eq!(json["label"], row.label.as_str());
            for (c, &x) in r.columns().iter().zip(&row.values) {
                assert_eq!(json[c].as_f64().unwrap(), round12(x));
            }
        }
        // C vs C at any entanglement is mutual cooperation
        assert!((r.value("expected", "payoff_1").unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn rounding_keeps_twelve_digits() {
        assert_eq!(round12(0.1 + 0.2), 0.3);
        assert_eq!(round12(-0.0), 0.0);
        assert_eq!(round12(1.0 / 3.0).to_string(), "0.333333333333");
        assert_eq!(render(round12(2.0f64.powi(-40))), "9.09494701773e-13");
        assert_eq!(render(-2.5), "-2.5");
    }

    #[test]
    fn format_parsing() {
        assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
        assert!(matches!(
            "xml".parse::<Format>(),
            Err(Error::UnknownFormat(_))
        ));
    }

    #[test]
    fn angle_flag_parsing() {
        let p = parse_angles("--alice", "1.0, 0.5,-0.5").unwrap();
        assert_eq!((p.theta(), p.alpha(), p.beta()), (1.0, 0.5, -0.5));
        assert!(parse_angles("--alice", "1,2").is_err());
        assert!(parse_angles("--bob", "4,0,0").unwrap_err().is_usage());
    }
}
