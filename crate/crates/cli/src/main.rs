use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use origami::cover::{cover_veech_group, validate, BaseMarking, MonodromyTuple};
use origami::moduli::{cylinder_moduli, is_compatible, moduli_system, realize_geometry, Directions, ModuliList};
use origami::origami::{double_cover, enumerate_each, is_equivalent, singularity_profile, to_xye};
use origami::perm::{centralizer_order_signed, Ambient};
use origami::render::{render_dessin_svg, render_svg};
use origami::text::{parse_matrix, parse_origami, parse_rationals};
use origami::veech::{contains, orbit_stabilizer};
use origami::{Dir, Error, GroupWord, Mat2, Mode, Origami};
use serde_json::{json, Value};

const CONVENTIONS: &str =
    "composition (p*q)(i) = p(q(i)); words act left to right; moduli are height/width";

#[derive(Parser)]
#[command(name = "origami", version, about = "Computations with square-tiled half-translation surfaces")]
struct Cli {
    /// Emit a single JSON document
    #[arg(long, global = true)]
    json: bool,
    /// Veech group in PSL(2,Z) or, for abelian origamis, SL(2,Z)
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Psl)]
    mode: ModeArg,
    /// Pair of directions as multiples of pi, e.g. `0,1/2`
    #[arg(long, global = true)]
    dirs: Option<String>,
    /// Write output to a file (atomically) instead of stdout
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Psl,
    Sl,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Psl => Mode::Projective,
            ModeArg::Sl => Mode::Linear,
        }
    }
}

/// Origamis are written `x=…; y=…; eps=…` or `mu=…; nu=…`; any argument may be `@path`.
#[derive(Subcommand)]
enum Command {
    /// Degree, genus, singularities and automorphisms
    Info { origami: String },
    /// The canonical double cover (X, Y, n)
    DoubleCover { origami: String },
    /// Decide equivalence and print a relabeling
    Isomorphic { a: String, b: String },
    /// Index, coset representatives and stabilizer generators of the Veech group
    Veech { origami: String },
    /// The orbit under the action of T and S
    Orbit { origami: String },
    /// Whether a matrix `[[a,b],[c,d]]` lies in the Veech group
    Contains { origami: String, matrix: String },
    /// Loop equations and the kernel of compatible exponent vectors
    Moduli { origami: String },
    /// Whether a moduli list `m1,m2,…` is compatible
    CheckModuli { origami: String, moduli: String },
    /// Rectangle widths and heights realizing a compatible moduli list
    Geometry { origami: String, moduli: String },
    /// Horizontal and vertical cylinders with their moduli
    Cylinders { origami: String, moduli: Option<String> },
    /// Veech group of a cover of D given by a tuple `N=…; tau0=…; …; tau6=…`
    CoverVeech { tuple: String },
    /// All connected origamis of a degree, up to equivalence
    Enumerate {
        degree: usize,
        /// Only abelian origamis
        #[arg(long)]
        abelian: bool,
    },
    /// SVG drawing of the square tiling
    Render {
        origami: String,
        /// Draw the dessin instead
        #[arg(long)]
        dessin: bool,
    },
}

struct Output {
    text: String,
    json: Value,
}

fn arg(s: &str) -> anyhow::Result<String> {
    match s.strip_prefix('@') {
        Some(path) => Ok(std::fs::read_to_string(path)
            .map_err(|e| anyhow::anyhow!("cannot read {path}: {e}"))?
            .trim()
            .to_string()),
        None => Ok(s.to_string()),
    }
}

fn origami_arg(s: &str) -> anyhow::Result<Origami> {
    Ok(parse_origami(&arg(s)?)?)
}

fn moduli_arg(s: &str, d: usize) -> anyhow::Result<ModuliList> {
    let m = ModuliList::new(parse_rationals(&arg(s)?)?)?;
    if m.len() != d {
        return Err(Error::DegreeMismatch(d, m.len()).into());
    }
    Ok(m)
}

fn dirs_arg(s: Option<&str>) -> anyhow::Result<Directions> {
    let Some(s) = s else {
        return Ok(Directions::default());
    };
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [a, b] = parts.as_slice() else {
        return Err(Error::Syntax { pos: 0, msg: "expected two directions 'a,b'".into() }.into());
    };
    let parse = |t: &str| {
        BigRational::from_str(t).map_err(|_| Error::Syntax { pos: 0, msg: format!("bad direction '{t}'") })
    };
    Ok(Directions::new(parse(a)?, parse(b)?)?)
}

fn describe(o: &Origami) -> Value {
    let xye = to_xye(o).map(|t| t.to_string()).unwrap_or_default();
    json!({ "gluings": o.to_string(), "xye": xye, "degree": o.degree() })
}

fn rationals(v: &[BigRational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn mat_json(m: &Mat2) -> Value {
    json!(m.rows())
}

fn words(ws: &[GroupWord]) -> Vec<String> {
    ws.iter().map(ToString::to_string).collect()
}

fn run(cli: &Cli, out: &mut dyn FnMut(&str)) -> anyhow::Result<Output> {
    let mode: Mode = cli.mode.into();
    let mode_name = match cli.mode {
        ModeArg::Psl => "psl",
        ModeArg::Sl => "sl",
    };
    Ok(match &cli.command {
        Command::Info { origami } => {
            let o = origami_arg(origami)?;
            let p = singularity_profile(&o)?;
            let aut = centralizer_order_signed(&[o.mu().clone(), o.nu().clone()], o.degree(), Ambient::Odd);
            let join = |v: &[String]| v.join(",");
            let valency: Vec<String> = p.valency.iter().map(ToString::to_string).collect();
            let orders: Vec<String> = p.orders.iter().map(ToString::to_string).collect();
            let xye = to_xye(&o)?;
            let text = format!(
                "origami: {xye}\ngluings: {o}\ndegree: {}\nabelian: {}\ngenus: {}\nvalency: {}\norders: {}\npoles: {}\nautomorphisms: {aut}\n",
                o.degree(),
                o.is_abelian(),
                p.genus,
                join(&valency),
                if orders.is_empty() { "none".into() } else { join(&orders) },
                p.poles,
            );
            let json = json!({
                "origami": describe(&o),
                "abelian": o.is_abelian(),
                "genus": p.genus,
                "valency": p.valency,
                "orders": p.orders,
                "poles": p.poles,
                "automorphism_order": aut.to_string(),
            });
            Output { text, json }
        }
        Command::DoubleCover { origami } => {
            let o = origami_arg(origami)?;
            let c = double_cover(&o);
            let comps = c.components();
            let mut text = format!(
                "X: {}\nY: {}\nn: {}\ndegree: {}\ncomponents: {}\n",
                c.x,
                c.y,
                c.n,
                c.degree(),
                comps.len()
            );
            let pairs: Vec<Value> = c
                .component_pairs()
                .iter()
                .map(|(x, y)| json!({ "x": x.to_string(), "y": y.to_string() }))
                .collect();
            for (x, y) in c.component_pairs() {
                text.push_str(&format!("component: x={x}; y={y}\n"));
            }
            let json = json!({
                "origami": describe(&o),
                "X": c.x.to_string(),
                "Y": c.y.to_string(),
                "n": c.n.to_string(),
                "degree": c.degree(),
                "connected": c.is_connected(),
                "components": pairs,
            });
            Output { text, json }
        }
        Command::Isomorphic { a, b } => {
            let oa = origami_arg(a)?;
            let ob = origami_arg(b)?;
            let w = is_equivalent(&oa, &ob);
            let text = match &w {
                Some(t) => format!("equivalent: true\nrelabeling: {t}\n"),
                None => "equivalent: false\n".to_string(),
            };
            let json = json!({
                "equivalent": w.is_some(),
                "relabeling": w.map(|t| t.to_string()),
            });
            Output { text, json }
        }
        Command::Veech { origami } => {
            let o = origami_arg(origami)?;
            let r = orbit_stabilizer(&o, mode)?;
            let mut text = format!("mode: {mode_name}\nindex: {}\n", r.index);
            text.push_str(&format!("cosets: {}\n", words(&r.coset_reps).join(" ")));
            text.push_str("stabilizer:\n");
            for (w, m) in r.stabilizer_gens.iter().zip(&r.stabilizer_matrices) {
                match mode {
                    Mode::Linear => text.push_str(&format!("  {w}  {m}\n")),
                    Mode::Projective => text.push_str(&format!("  {w}\n")),
                }
            }
            let json = json!({
                "origami": describe(&o),
                "mode": mode_name,
                "index": r.index,
                "coset_reps": words(&r.coset_reps),
                "stabilizer_gens": words(&r.stabilizer_gens),
                "stabilizer_matrices": r.stabilizer_matrices.iter().map(mat_json).collect::<Vec<_>>(),
            });
            Output { text, json }
        }
        Command::Orbit { origami } => {
            let o = origami_arg(origami)?;
            let r = orbit_stabilizer(&o, mode)?;
            let mut text = format!("mode: {mode_name}\nsize: {}\n", r.index);
            let mut members = Vec::new();
            for (i, (w, p)) in r.coset_reps.iter().zip(&r.orbit).enumerate() {
                let shown = match mode {
                    Mode::Linear => {
                        let (x, y) = &r.orbit_pairs[i];
                        format!("x={x}; y={y}")
                    }
                    Mode::Projective => to_xye(p)?.to_string(),
                };
                text.push_str(&format!("{w}\t{shown}\n"));
                members.push(json!({ "word": w.to_string(), "origami": describe(p), "shown": shown }));
            }
            let json = json!({ "mode": mode_name, "size": r.index, "orbit": members });
            Output { text, json }
        }
        Command::Contains { origami, matrix } => {
            let o = origami_arg(origami)?;
            let m = Mat2::from_rows(parse_matrix(&arg(matrix)?)?);
            let c = contains(&o, m, mode)?;
            Output {
                text: format!("mode: {mode_name}\nmatrix: {m}\ncontains: {c}\n"),
                json: json!({ "mode": mode_name, "matrix": mat_json(&m), "contains": c }),
            }
        }
        Command::Moduli { origami } => {
            let o = origami_arg(origami)?;
            let s = moduli_system(&o)?;
            let row = |r: &[i64]| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
            let big_row = |r: &[num_bigint::BigInt]| r.iter().map(ToString::to_string).collect::<Vec<_>>();
            let mut text = format!("degree: {}\nequations: {}\n", o.degree(), s.a.len());
            for r in &s.a {
                text.push_str(&format!("  [{}]\n", row(r)));
            }
            text.push_str(&format!("kernel dimension: {}\n", s.kernel.len()));
            for v in &s.kernel {
                text.push_str(&format!("  [{}]\n", big_row(v).join(" ")));
            }
            text.push_str(&format!("automorphism generators: {}\n", s.automorphisms.len()));
            let json = json!({
                "origami": describe(&o),
                "equations": s.a,
                "kernel": s.kernel.iter().map(|v| big_row(v)).collect::<Vec<_>>(),
                "kernel_dimension": s.kernel.len(),
                "automorphisms": s.automorphisms.iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
            Output { text, json }
        }
        Command::CheckModuli { origami, moduli } => {
            let o = origami_arg(origami)?;
            let m = moduli_arg(moduli, o.degree())?;
            let c = is_compatible(&o, &m)?;
            Output {
                text: format!("moduli: {m}\ncompatible: {c}\n"),
                json: json!({ "origami": describe(&o), "moduli": rationals(m.values()), "compatible": c }),
            }
        }
        Command::Geometry { origami, moduli } => {
            let o = origami_arg(origami)?;
            let m = moduli_arg(moduli, o.degree())?;
            let dirs = dirs_arg(cli.dirs.as_deref())?;
            let g = realize_geometry(&o, &m, &dirs)?;
            let one_based = |c: &[Vec<usize>]| -> Vec<Vec<usize>> {
                c.iter().map(|v| v.iter().map(|i| i + 1).collect()).collect()
            };
            let text = format!(
                "directions: {}pi,{}pi\nw: {}\nh: {}\narea: {}\n",
                g.dirs.theta1,
                g.dirs.theta2,
                rationals(&g.w).join(","),
                rationals(&g.h).join(","),
                g.area
            );
            let json = json!({
                "origami": describe(&o),
                "directions": [g.dirs.theta1.to_string(), g.dirs.theta2.to_string()],
                "w": rationals(&g.w),
                "h": rationals(&g.h),
                "area": g.area.to_string(),
                "horizontal_cylinders": one_based(&g.horizontal),
                "vertical_cylinders": one_based(&g.vertical),
            });
            Output { text, json }
        }
        Command::Cylinders { origami, moduli } => {
            let o = origami_arg(origami)?;
            let m = match moduli {
                Some(s) => moduli_arg(s, o.degree())?,
                None => ModuliList::ones(o.degree()),
            };
            let g = realize_geometry(&o, &m, &Directions::default())?;
            let mut text = String::new();
            let mut json_dirs = serde_json::Map::new();
            for (name, dir, cyls) in [("horizontal", Dir::Horizontal, &g.horizontal), ("vertical", Dir::Vertical, &g.vertical)] {
                let mods = cylinder_moduli(&o, &m, dir)?;
                text.push_str(&format!("{name}:\n"));
                let mut entries = Vec::new();
                for (c, md) in cyls.iter().zip(&mods) {
                    let squares: Vec<usize> = c.iter().map(|i| i + 1).collect();
                    let shown: Vec<String> = squares.iter().map(ToString::to_string).collect();
                    text.push_str(&format!("  squares {}  modulus {md}\n", shown.join(",")));
                    entries.push(json!({ "squares": squares, "modulus": md.to_string() }));
                }
                json_dirs.insert(name.into(), Value::Array(entries));
            }
            let json = json!({ "origami": describe(&o), "moduli": rationals(m.values()), "cylinders": json_dirs });
            Output { text, json }
        }
        Command::CoverVeech { tuple } => {
            let b = BaseMarking::d();
            let t = MonodromyTuple::parse(&arg(tuple)?, b.generators.len())?;
            let v = validate(&b, &t);
            if !v.is_empty() {
                return Err(anyhow::Error::new(Violations(v.iter().map(ToString::to_string).collect())));
            }
            let r = cover_veech_group(&b, &t)?;
            let text = format!(
                "base: {}\ntuple: {t}\nindex: {}\ncosets: {}\nstabilizer:\n{}",
                b.name,
                r.index,
                words(&r.coset_reps).join(" "),
                r.stabilizer_gens.iter().map(|w| format!("  {w}\n")).collect::<String>()
            );
            let json = json!({
                "base": b.name,
                "tuple": t.to_string(),
                "index": r.index,
                "coset_reps": words(&r.coset_reps),
                "stabilizer_gens": words(&r.stabilizer_gens),
            });
            Output { text, json }
        }
        Command::Enumerate { degree, abelian } => {
            if *degree == 0 {
                return Err(Error::Validation("degree must be positive".into()).into());
            }
            let stream = !cli.json && cli.output.is_none();
            let mut text = String::new();
            let mut listed = Vec::new();
            let mut count = 0usize;
            let mut failure = None;
            enumerate_each(*degree, |o| {
                if failure.is_some() || (*abelian && !o.is_abelian()) {
                    return;
                }
                match to_xye(&o) {
                    Ok(t) => {
                        count += 1;
                        let line = format!("{t}\n");
                        if stream {
                            out(&line);
                        } else {
                            text.push_str(&line);
                        }
                        if cli.json {
                            listed.push(describe(&o));
                        }
                    }
                    Err(e) => failure = Some(e),
                }
            });
            if let Some(e) = failure {
                return Err(e.into());
            }
            text.push_str(&format!("count: {count}\n"));
            Output { text, json: json!({ "degree": degree, "abelian_only": abelian, "count": count, "origamis": listed }) }
        }
        Command::Render { origami, dessin } => {
            let o = origami_arg(origami)?;
            let svg = if *dessin { render_dessin_svg(&o)? } else { render_svg(&o)? };
            Output { json: json!({ "origami": describe(&o), "svg": svg }), text: svg }
        }
    })
}

#[derive(Debug)]
struct Violations(Vec<String>);

impl std::fmt::Display for Violations {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "invalid tuple: {}", self.0.join("; "))
    }
}

impl std::error::Error for Violations {}

fn error_kind(e: &anyhow::Error) -> (&'static str, Value) {
    if let Some(v) = e.downcast_ref::<Violations>() {
        return ("InvalidTuple", json!(v.0));
    }
    let kind = match e.downcast_ref::<Error>() {
        Some(Error::DegreeMismatch(..)) => "DegreeMismatch",
        Some(Error::Disconnected) => "Disconnected",
        Some(Error::InvalidInvolution(_)) => "InvalidInvolution",
        Some(Error::NormalizationFailure(_)) => "NormalizationFailure",
        Some(Error::NotUnimodular(_)) => "NotUnimodular",
        Some(Error::NotClosed(_)) => "NotClosed",
        Some(Error::Incompatible) => "Incompatible",
        Some(Error::SingularMatrix) => "SingularMatrix",
        Some(Error::InvalidTuple(_)) => "InvalidTuple",
        Some(Error::NotAbelian) => "NotAbelian",
        Some(Error::Syntax { .. }) => "SyntaxError",
        Some(Error::Validation(_)) => "ValidationError",
        None => "IoError",
    };
    let pos = match e.downcast_ref::<Error>() {
        Some(Error::Syntax { pos, .. }) => json!(pos),
        _ => Value::Null,
    };
    (kind, pos)
}

fn write_atomic(path: &Path, contents: &str) -> anyhow::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let svg = matches!(cli.command, Command::Render { .. });
    let header = format!("# conventions: {CONVENTIONS}\n");
    let streaming = !cli.json && cli.output.is_none();
    let mut header_done = false;
    let mut print = |s: &str| {
        let mut lock = stdout.lock();
        if !header_done {
            let _ = lock.write_all(header.as_bytes());
            header_done = true;
        }
        let _ = lock.write_all(s.as_bytes());
        let _ = lock.flush();
    };
    let result = run(&cli, &mut print);
    let (rendered, code) = match result {
        Ok(o) => {
            let body = if cli.json {
                let mut doc = json!({ "schema": 1, "conventions": CONVENTIONS, "command": command_name(&cli.command) });
                doc["result"] = o.json;
                format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
            } else if svg || (streaming && header_done) {
                o.text
            } else {
                format!("{header}{}", o.text)
            };
            (body, ExitCode::SUCCESS)
        }
        Err(e) => {
            if cli.json {
                let (kind, detail) = error_kind(&e);
                let doc = json!({
                    "schema": 1,
                    "conventions": CONVENTIONS,
                    "command": command_name(&cli.command),
                    "error": { "kind": kind, "message": e.to_string(), "detail": detail },
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            } else {
                eprintln!("error: {e}");
            }
            return ExitCode::from(1);
        }
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = write_atomic(path, &rendered) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
        }
        None => {
            let mut lock = std::io::stdout().lock();
            let _ = lock.write_all(rendered.as_bytes());
        }
    }
    code
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Info { .. } => "info",
        Command::DoubleCover { .. } => "double-cover",
        Command::Isomorphic { .. } => "isomorphic",
        Command::Veech { .. } => "veech",
        Command::Orbit { .. } => "orbit",
        Command::Contains { .. } => "contains",
        Command::Moduli { .. } => "moduli",
        Command::CheckModuli { .. } => "check-moduli",
        Command::Geometry { .. } => "geometry",
        Command::Cylinders { .. } => "cylinders",
        Command::CoverVeech { .. } => "cover-veech",
        Command::Enumerate { .. } => "enumerate",
        Command::Render { .. } => "render",
    }
}
