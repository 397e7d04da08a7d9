use std::fmt;
use std::io::{Read, Write};
use std::path::Path;

use knotgrid::braid::{BraidError, BraidWord, ExchangeKind, ExchangeSite};
use knotgrid::config::{Config, OutputFormat};
use knotgrid::family::{self, FamilyError, FamilyParams};
use knotgrid::floer::{self, FloerError, ThetaCertificate};
use knotgrid::grid::{CromwellMove, GridDiagram, GridError};
use knotgrid::homfly::{HomflyEngine, HomflyError, LaurentPoly2};
use serde_json::{json, Value};

use crate::{BraidCmd, Command, Eval, Expect, FamilyCmd, FloerCmd, GridCmd, HomflyCmd};

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Refusal(String),
    Budget(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Refusal(_) => 1,
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Refusal(m) | CliError::Budget(m) => f.write_str(m),
        }
    }
}

impl From<GridError> for CliError {
    fn from(e: GridError) -> Self {
        match e {
            GridError::MultiComponent(_)
            | GridError::IllegalCommutation(..)
            | GridError::NoSuchStabilization { .. } => CliError::Refusal(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<BraidError> for CliError {
    fn from(e: BraidError) -> Self {
        match e {
            BraidError::OutOfRange { .. }
            | BraidError::StrandMismatch(..)
            | BraidError::Parse(_) => CliError::Input(e.to_string()),
            _ => CliError::Refusal(e.to_string()),
        }
    }
}

impl From<FloerError> for CliError {
    fn from(e: FloerError) -> Self {
        match e {
            FloerError::BudgetExceeded(_) => CliError::Budget(e.to_string()),
            FloerError::SizeMismatch { .. } => CliError::Input(e.to_string()),
            FloerError::MultiComponent(_) | FloerError::TooLarge { .. } => {
                CliError::Refusal(e.to_string())
            }
        }
    }
}

impl From<HomflyError> for CliError {
    fn from(e: HomflyError) -> Self {
        match e {
            HomflyError::DiagramTooLarge { .. } => CliError::Budget(e.to_string()),
            HomflyError::NegativeZPower(_) => CliError::Refusal(e.to_string()),
            HomflyError::Malformed | HomflyError::Parse(_) => CliError::Input(e.to_string()),
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        CliError::Input(e.to_string())
    }
}

/// A command's result in both output formats.
pub struct Output {
    json: Value,
    text: String,
    pub code: u8,
}

impl Output {
    fn new(json: Value, text: impl Into<String>) -> Self {
        Self {
            json,
            text: text.into(),
            code: 0,
        }
    }

    fn refuse_if(mut self, refuse: bool) -> Self {
        if refuse {
            self.code = 1;
        }
        self
    }

    pub fn print(&self, format: OutputFormat) {
        let body = match format {
            OutputFormat::Json => serde_json::to_string_pretty(&self.json).expect("json"),
            OutputFormat::Text => self.text.trim_end().to_string(),
        };
        // a closed pipe (e.g. `| head`) is not an error worth reporting
        let _ = writeln!(std::io::stdout().lock(), "{body}");
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write_output(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// JSON if the file starts with `{`, ASCII art otherwise.
fn read_grid(path: &Path) -> Result<GridDiagram, CliError> {
    let s = read_input(path)?;
    let g = if s.trim_start().starts_with('{') {
        GridDiagram::from_json(&s)?
    } else {
        GridDiagram::from_ascii(&s)?
    };
    Ok(g)
}

fn parse_braid(s: &str) -> Result<BraidWord, CliError> {
    Ok(s.parse::<BraidWord>()?)
}

fn grid_json(g: &GridDiagram) -> Value {
    serde_json::from_str(&g.to_json()).expect("grid json")
}

fn grid_output(g: &GridDiagram) -> Output {
    Output::new(grid_json(g), format!("{}\n{}", g.to_json(), g.to_ascii()))
}

fn braid_output(b: &BraidWord) -> Output {
    Output::new(
        json!({ "braid": b.to_string(), "sigma": b.to_sigma_string(), "strands": b.strands() }),
        format!("{b}\n{}", b.to_sigma_string()),
    )
}

fn numbers(s: &str, count: usize) -> Result<Vec<i64>, CliError> {
    let v: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| {
            CliError::Input(format!(
                "--at expects {count} comma-separated integers, got {s:?}"
            ))
        })?;
    if v.len() != count {
        return Err(CliError::Input(format!(
            "--at expects {count} comma-separated integers, got {s:?}"
        )));
    }
    Ok(v)
}

fn index(v: i64) -> Result<usize, CliError> {
    usize::try_from(v).map_err(|_| CliError::Input(format!("index {v} must be nonnegative")))
}

fn parse_move(kind: &str, at: &str) -> Result<CromwellMove, CliError> {
    Ok(match kind {
        "translation" => {
            let v = numbers(at, 2)?;
            CromwellMove::Translate { dx: v[0], dy: v[1] }
        }
        "commutation" => CromwellMove::CommuteColumns {
            col: index(numbers(at, 1)?[0])?,
        },
        "commutation-rows" => CromwellMove::CommuteRows {
            row: index(numbers(at, 1)?[0])?,
        },
        "destab" => {
            let v = numbers(at, 2)?;
            CromwellMove::Destabilize {
                col: index(v[0])?,
                row: index(v[1])?,
            }
        }
        k if k.starts_with("stab:") => CromwellMove::Stabilize {
            col: index(numbers(at, 1)?[0])?,
            corner: k["stab:".len()..].parse()?,
        },
        _ => return Err(CliError::Input(format!("unknown move kind {kind:?}"))),
    })
}

pub fn run(cmd: &Command, config: &Config) -> Result<Output, CliError> {
    match cmd {
        Command::Grid(c) => grid(c),
        Command::Braid(c) => braid(c),
        Command::Floer(c) => floer_cmd(c, config),
        Command::Homfly(c) => homfly(c, config),
        Command::Family(c) => family_cmd(c, config),
    }
}

fn grid(cmd: &GridCmd) -> Result<Output, CliError> {
    match cmd {
        GridCmd::Validate { file } => {
            let g = read_grid(file)?;
            let k = g.component_count();
            Ok(Output::new(
                json!({ "valid": true, "n": g.size(), "components": k }),
                format!("valid grid, n = {}, {k} component(s)", g.size()),
            ))
        }
        GridCmd::Show { file } => Ok(grid_output(&read_grid(file)?)),
        GridCmd::Mirror { file } => Ok(grid_output(&read_grid(file)?.diagonal_mirror())),
        GridCmd::Xplus { file } => {
            let g = read_grid(file)?;
            g.require_knot()?;
            let x = g.x_plus();
            Ok(Output::new(
                json!({ "x_plus": x }),
                format!("{x}\nabbreviated {}", x.abbreviated()),
            ))
        }
        GridCmd::Front { file } => {
            let f = read_grid(file)?.front_data()?;
            Ok(Output::new(
                json!({ "tb": f.tb(), "r": f.rotation(), "sl": f.self_linking(), "writhe": f.writhe,
                        "cusps_up": f.cusps_up, "cusps_down": f.cusps_down }),
                format!(
                    "tb = {}\nr = {}\nsl = {}",
                    f.tb(),
                    f.rotation(),
                    f.self_linking()
                ),
            ))
        }
        GridCmd::Move { file, kind, at } => {
            let g = read_grid(file)?;
            let mv = parse_move(kind, at)?;
            let (h, effect) = g.apply_move(mv)?;
            let mut out = grid_output(&h);
            out.json = json!({ "grid": grid_json(&h), "effect": effect });
            out.text = format!("{}\n{}effect: {effect:?}", h.to_json(), h.to_ascii());
            Ok(out)
        }
        GridCmd::ToBraid { file, prime } => {
            let g = read_grid(file)?;
            let b = if *prime {
                g.to_braid_prime()
            } else {
                g.to_braid()
            };
            Ok(braid_output(&b))
        }
    }
}

fn braid(cmd: &BraidCmd) -> Result<Output, CliError> {
    match cmd {
        BraidCmd::Nf { word } => {
            let nf = parse_braid(word)?.normal_form();
            Ok(Output::new(
                json!({ "normal_form": nf.to_string(), "inf": nf.inf, "canonical_length": nf.canonical_length() }),
                nf.to_string(),
            ))
        }
        BraidCmd::Equal { first, second } => {
            let eq = parse_braid(first)?.braid_equal(&parse_braid(second)?)?;
            let text = if eq { "equal" } else { "not equal" };
            Ok(Output::new(json!({ "equal": eq }), text).refuse_if(!eq))
        }
        BraidCmd::Sl { word } => {
            let b = parse_braid(word)?;
            let f = b.front_data()?;
            Ok(Output::new(
                json!({ "sl": b.sl(), "tb": f.tb(), "r": f.rotation(), "writhe": b.writhe() }),
                format!("sl = {}\ntb = {}\nr = {}", b.sl(), f.tb(), f.rotation()),
            ))
        }
        BraidCmd::Conjugate { word, by } => Ok(braid_output(&parse_braid(word)?.conjugate(*by)?)),
        BraidCmd::Exchange { word, kind, at } => {
            let b = parse_braid(word)?;
            let kind: ExchangeKind = kind.parse()?;
            match at {
                None => {
                    let sites = b.exchange_sites(kind);
                    let text: Vec<String> = sites
                        .iter()
                        .map(|s| format!("{},{}", s.first, s.second))
                        .collect();
                    Ok(Output::new(json!({ "sites": sites }), text.join("\n")))
                }
                Some(at) => {
                    let v = numbers(at, 2)?;
                    let site = ExchangeSite {
                        first: index(v[0])?,
                        second: index(v[1])?,
                    };
                    Ok(braid_output(&b.exchange_move(site, kind)?))
                }
            }
        }
        BraidCmd::Stabilize { word } => Ok(braid_output(&parse_braid(word)?.markov_stabilize())),
        BraidCmd::Destabilize { word } => {
            Ok(braid_output(&parse_braid(word)?.markov_destabilize()?))
        }
        BraidCmd::ToGrid { word } => Ok(grid_output(&parse_braid(word)?.to_grid())),
    }
}

fn certificate_text(cert: &ThetaCertificate) -> String {
    match cert {
        ThetaCertificate::NullChain { chain } => {
            let states: Vec<String> = chain.iter().map(|s| s.abbreviated()).collect();
            format!("theta vanishes: x+ = d({})", states.join(" + "))
        }
        ThetaCertificate::NonVanishing { a, b, rank, .. } => format!(
            "theta does not vanish: |A| = {}, |B| = {}, rank {rank}, x+ not in the row space",
            a.len(),
            b.len()
        ),
    }
}

fn floer_cmd(cmd: &FloerCmd, config: &Config) -> Result<Output, CliError> {
    match cmd {
        FloerCmd::Theta {
            file,
            oracle,
            emit_certificate,
            expect,
        } => {
            let g = read_grid(file)?;
            let cert = floer::theta_vanishes(&g, config.theta_state_cap)?;
            if let Some(path) = emit_certificate {
                write_output(path, &serde_json::to_string_pretty(&cert).expect("json"))?;
            }
            let vanishes = cert.vanishes();
            let mut json = json!({ "vanishes": vanishes, "certificate": cert });
            let mut text = certificate_text(&cert);
            let mut disagree = false;
            if *oracle {
                let brute = floer::brute_force_theta(&g)?;
                disagree = brute != vanishes;
                json["oracle_vanishes"] = json!(brute);
                text.push_str(&format!(
                    "\noracle: {}",
                    if brute { "vanishes" } else { "does not vanish" }
                ));
            }
            let unexpected = match expect {
                Some(Expect::Vanishing) => !vanishes,
                Some(Expect::Nonvanishing) => vanishes,
                None => false,
            };
            Ok(Output::new(json, text).refuse_if(unexpected || disagree))
        }
        FloerCmd::Verify { file, certificate } => {
            let g = read_grid(file)?;
            let cert: ThetaCertificate = serde_json::from_str(&read_input(certificate)?)
                .map_err(|e| CliError::Input(format!("certificate: {e}")))?;
            let ok = floer::verify_certificate(&g, &cert, config.theta_state_cap);
            let text = if ok {
                "certificate verified"
            } else {
                "certificate rejected"
            };
            Ok(
                Output::new(json!({ "verified": ok, "vanishes": cert.vanishes() }), text)
                    .refuse_if(!ok),
            )
        }
    }
}

fn homfly_output(p: LaurentPoly2, eval: Option<Eval>) -> Result<Output, CliError> {
    let mut json = json!({ "polynomial": p.to_string() });
    let mut text = p.to_string();
    match eval {
        None => {}
        Some(Eval::Z0) => {
            let v = p.eval_z0()?.to_string();
            text = format!("P = {p}\nP(x,0) = {v}");
            json["z0"] = json!(v);
        }
        Some(Eval::Z2i) => {
            let v = p.eval_z2i()?.to_string();
            text = format!("P = {p}\nP(x,2i) = {v}");
            json["z2i"] = json!(v);
        }
    }
    Ok(Output::new(json, text))
}

fn homfly(cmd: &HomflyCmd, config: &Config) -> Result<Output, CliError> {
    let mut engine = HomflyEngine::new(config.homfly_crossing_cap);
    match cmd {
        HomflyCmd::Braid { word, eval } => {
            let p = engine.homfly(&parse_braid(word)?.closure_diagram())?;
            homfly_output(p, *eval)
        }
        HomflyCmd::Grid { file, eval } => {
            let p = engine.homfly(&read_grid(file)?.to_planar())?;
            homfly_output(p, *eval)
        }
    }
}

fn params(ab: &crate::Ab) -> Result<FamilyParams, CliError> {
    Ok(FamilyParams::new(ab.a, ab.b)?)
}

fn family_cmd(cmd: &FamilyCmd, config: &Config) -> Result<Output, CliError> {
    match cmd {
        FamilyCmd::G1(ab) => Ok(grid_output(&family::g1(params(ab)?))),
        FamilyCmd::G2(ab) => Ok(grid_output(&family::g2(params(ab)?))),
        FamilyCmd::B1(ab) => Ok(braid_output(&family::b1_word(params(ab)?))),
        FamilyCmd::B2(ab) => Ok(braid_output(&family::b2_word(params(ab)?))),
        FamilyCmd::Conjectured { ab, c, d } => {
            Ok(braid_output(&family::conjectured_word(ab.a, ab.b, *c, *d)?))
        }
        FamilyCmd::Primality(ab) => {
            let c = family::primality_check(params(ab)?);
            let text = format!(
                "z=0 solutions {:?}\nz=2i solutions {:?}\ncommon {:?}\n4b(1+a) = {}\nprime: {}",
                c.z0_solutions, c.z2i_solutions, c.common, c.difference, c.prime
            );
            let prime = c.prime;
            Ok(Output::new(json!(c), text).refuse_if(!prime))
        }
        FamilyCmd::Flype => {
            let (l, r) = family::footnote_flype_pair();
            let mut engine = HomflyEngine::new(config.homfly_crossing_cap);
            let (pl, pr) = (
                engine.homfly(&l.closure_diagram())?,
                engine.homfly(&r.closure_diagram())?,
            );
            let same = pl == pr && l.sl() == r.sl();
            Ok(Output::new(
                json!({ "left": l.to_string(), "right": r.to_string(), "sl": [l.sl(), r.sl()],
                        "homfly": [pl.to_string(), pr.to_string()], "homfly_equal": pl == pr }),
                format!(
                    "{}\n{}\nsl {} and {}\nHOMFLY {}",
                    l.to_sigma_string(),
                    r.to_sigma_string(),
                    l.sl(),
                    r.sl(),
                    if pl == pr { "equal" } else { "different" }
                ),
            )
            .refuse_if(!same))
        }
        FamilyCmd::Reproduce { ab, report } => {
            let (r, budget) = match family::reproduce(params(ab)?, config) {
                Ok(r) => (r, false),
                Err(FamilyError::BudgetExceeded(partial)) => (*partial, true),
                Err(e) => return Err(e.into()),
            };
            let json = json!(r);
            if let Some(path) = report {
                write_output(path, &serde_json::to_string_pretty(&json).expect("json"))?;
            }
            let mut out = Output::new(json, r.to_string()).refuse_if(!r.certified);
            if budget {
                out.code = 3;
            }
            Ok(out)
        }
    }
}
