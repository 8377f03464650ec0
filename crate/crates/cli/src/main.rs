//! Command-line surface of the engine.

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use tautocycle::cycles::{self, std_family, std_plane_family};
use tautocycle::degeneration;
use tautocycle::ideal::{self, Direction, GradedIdeal, Point};
use tautocycle::io::IdealDocument;
use tautocycle::macaulay::{ab_to_dg, MacaulayData};
use tautocycle::orbits::{combo_degree, TautCombo};
use tautocycle::ring::{ParamForm, Rat};
use tautocycle::structure;
use tautocycle::verify;

#[derive(Parser)]
#[command(
    name = "tautocycle",
    version,
    about = "Exact intersection theory on Hilbert schemes of space curves",
    max_term_width = 100
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the randomized kernels (coordinate changes, projections).
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Degree cutoff for slice computations (defaults depend on the data).
    #[arg(long, global = true)]
    cutoff: Option<u32>,
    /// Degree range `lo..hi` (inclusive) for table-producing commands.
    #[arg(long, global = true, value_parser = parse_range)]
    range: Option<(u32, u32)>,
    #[command(subcommand)]
    command: Command,
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (lo, hi) = s.split_once("..").ok_or("range must look like 4..9")?;
    let lo = lo.trim().parse().map_err(|_| "bad range start")?;
    let hi = hi.trim().parse().map_err(|_| "bad range end")?;
    if hi < lo {
        return Err("empty range".into());
    }
    Ok((lo, hi))
}

#[derive(Args)]
struct IdealArg {
    /// Path of an ideal document (JSON or one-generator-per-line); `-`
    /// reads standard input.
    #[arg(long)]
    ideal: PathBuf,
}

impl IdealArg {
    fn load(&self) -> tautocycle::Result<GradedIdeal> {
        let text = if self.ideal.as_os_str() == "-" {
            use std::io::Read;
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| tautocycle::Error::Format(format!("cannot read stdin: {e}")))?;
            s
        } else {
            std::fs::read_to_string(&self.ideal).map_err(|e| {
                tautocycle::Error::Format(format!("cannot read {}: {e}", self.ideal.display()))
            })?
        };
        IdealDocument::parse(&text)?.to_ideal()
    }
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert function of the saturation over a degree range.
    Hf(IdealArg),
    /// Hilbert polynomial of the ideal (needs --cutoff at least the
    /// regularity).
    Hp(IdealArg),
    /// Castelnuovo-Mumford regularity via the generic initial ideal.
    Reg(IdealArg),
    /// Borel-fixedness of a monomial ideal.
    Borel(IdealArg),
    /// Intersection number of a tautological combination with a named
    /// family.
    Intersect {
        /// Family name: C0, C1, C2, C3, D, Z0..Z3 (space) or E, F, G
        /// (plane, with --d).
        #[arg(long)]
        family: String,
        #[arg(long)]
        a: Option<u32>,
        #[arg(long)]
        b: Option<u32>,
        /// Plane-point length (selects the plane catalog).
        #[arg(long)]
        d: Option<u32>,
        /// Level n of a single tautological bundle.
        #[arg(long)]
        n: Option<u32>,
        /// Combination as `n:exp,n:exp`, e.g. `7:1,8:-2,9:1`.
        #[arg(long)]
        combo: Option<String>,
    },
    /// Coefficients of a family in the tautological basis.
    Decompose {
        #[arg(long)]
        family: String,
        #[arg(long)]
        a: Option<u32>,
        #[arg(long)]
        b: Option<u32>,
        #[arg(long)]
        d: Option<u32>,
    },
    /// Complexity of a parameter-free ideal: the class of its torus-orbit
    /// closure.
    Complexity {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
    },
    /// Flat limit under the diagonal action with the given weights.
    Limit {
        #[command(flatten)]
        ideal: IdealArg,
        /// Comma-separated integer weights, one per variable.
        #[arg(long)]
        weights: String,
        /// `zero` or `infinity`.
        #[arg(long, default_value = "zero")]
        direction: String,
    },
    /// Restriction modulo a linear form.
    Restrict {
        #[command(flatten)]
        ideal: IdealArg,
        /// The linear form, e.g. `t` or `y + t`.
        #[arg(long)]
        linear: String,
    },
    /// Star extension of a 3-variable ideal into the curve ring.
    Star(IdealArg),
    /// CM part and punctual components.
    CmSplit(IdealArg),
    /// Hilbert-Chow cycle: reduced curve components with multiplicities.
    Chow(IdealArg),
    /// Whether two ideals land in the same tautological fiber.
    Fequiv {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        ideal2: PathBuf,
    },
    /// Fiber size of the maximal-regularity morphism: count essentially
    /// different linear factors.
    Gfiber {
        /// A monomial like `y^4*z`, whose variables are the factors...
        #[arg(long)]
        monomial: Option<String>,
        /// ...or an explicit factor list `form:mult;form:mult`.
        #[arg(long)]
        factors: Option<String>,
    },
    /// Linear projection of a point from a center onto a plane, checked
    /// against the torus-limit route.
    Project {
        /// Comma-separated homogeneous coordinates, e.g. `1,1,1,1`.
        #[arg(long)]
        point: String,
        #[arg(long)]
        center: String,
        /// Linear form of the image plane, e.g. `t`.
        #[arg(long)]
        plane: String,
    },
    /// The dual-basis intersection tables.
    Table {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
    },
    /// Run the verification suite.
    Verify {
        /// Which suite to run (only `paper` exists).
        #[arg(long, default_value = "paper")]
        suite: String,
        /// Documentation file checked by the final criterion.
        #[arg(long, default_value = "README.md")]
        readme: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::FAILURE
        }
    }
}

fn emit(cli: &Cli, json: serde_json::Value, text: String) {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&json).unwrap());
    } else {
        println!("{text}");
    }
}

fn rat_str(r: &Rat) -> String {
    r.to_string()
}

fn run(cli: &Cli) -> tautocycle::Result<()> {
    match &cli.command {
        Command::Hf(arg) => {
            let ideal = arg.load()?;
            let (lo, hi) = cli.range.unwrap_or((0, 10));
            let cap = cli.cutoff.unwrap_or(hi + 4);
            let hf = ideal::hilbert_function(&ideal, lo..=hi, cap);
            let rows: Vec<(u32, usize)> = hf.iter().collect();
            emit(
                cli,
                serde_json::json!({"hf": rows
                    .iter()
                    .map(|(n, v)| serde_json::json!({"n": n, "dim": v}))
                    .collect::<Vec<_>>()}),
                rows.iter().map(|(n, v)| format!("h({n}) = {v}")).collect::<Vec<_>>().join("\n"),
            );
        }
        Command::Hp(arg) => {
            let ideal = arg.load()?;
            let cutoff = cli.cutoff.ok_or_else(|| {
                tautocycle::Error::CutoffTooSmall("hp needs --cutoff >= the regularity".into())
            })?;
            let q = ideal::hilbert_polynomial(&ideal, cutoff)?;
            let power: Vec<String> = q.power_coeffs().iter().map(rat_str).collect();
            emit(
                cli,
                serde_json::json!({"binomial": q.render(), "power": power}),
                format!("Q(n) = {}", q.render()),
            );
        }
        Command::Reg(arg) => {
            let ideal = arg.load()?;
            let cutoff = cli.cutoff.ok_or_else(|| {
                tautocycle::Error::CutoffTooSmall("reg needs --cutoff >= the regularity".into())
            })?;
            let r = ideal::regularity(&ideal, cutoff, cli.seed)?;
            emit(cli, serde_json::json!({"regularity": r}), format!("regularity = {r}"));
        }
        Command::Borel(arg) => {
            let ideal = arg.load()?;
            let fixed = ideal::is_borel_fixed(&ideal)?;
            emit(cli, serde_json::json!({"borel_fixed": fixed}), format!("borel-fixed: {fixed}"));
        }
        Command::Intersect { family, a, b, d, n, combo } => {
            let fam = named_family(family, *a, *b, *d)?;
            let combo = match (n, combo) {
                (Some(n), None) => TautCombo::single(*n),
                (None, Some(spec)) => parse_combo(spec)?,
                _ => {
                    return Err(tautocycle::Error::Format(
                        "pass exactly one of --n or --combo".into(),
                    ))
                }
            };
            let v = combo_degree(&fam, &combo, cli.seed)?;
            emit(cli, serde_json::json!({"value": rat_str(&v)}), format!("intersection number = {v}"));
        }
        Command::Decompose { family, a, b, d } => {
            let (dec, basis_names) = match (a, b, d) {
                (Some(a), Some(b), None) => {
                    let m = ab_to_dg(*a, *b)?;
                    let fam = std_family(family, &m)?;
                    (cycles::decompose(&fam, &m, cli.seed)?, ["q0", "q1", "q2"].as_slice())
                }
                (None, None, Some(d)) => {
                    let fam = std_plane_family(family, *d)?;
                    (cycles::decompose_plane(&fam, *d, cli.seed)?, ["qE", "qF"].as_slice())
                }
                _ => {
                    return Err(tautocycle::Error::Format(
                        "pass --a and --b (space) or --d (plane)".into(),
                    ))
                }
            };
            let mut coeff_obj = serde_json::Map::new();
            for (name, c) in basis_names.iter().zip(&dec.class.coeffs) {
                coeff_obj.insert(name.to_string(), serde_json::json!(rat_str(c)));
            }
            let json = serde_json::json!({
                "basis": match dec.class.basis {
                    cycles::CycleBasis::SpaceCurves => "space-curves",
                    cycles::CycleBasis::PlanePoints => "plane-points",
                },
                "coefficients": coeff_obj,
                "samples": dec
                    .samples
                    .iter()
                    .map(|(n, v)| serde_json::json!({"n": n, "value": rat_str(v)}))
                    .collect::<Vec<_>>(),
                "residuals": dec
                    .residuals
                    .iter()
                    .map(|(n, v)| serde_json::json!({"n": n, "value": rat_str(v)}))
                    .collect::<Vec<_>>(),
            });
            let text = basis_names
                .iter()
                .zip(&dec.class.coeffs)
                .map(|(n, c)| format!("{n} = {c}"))
                .collect::<Vec<_>>()
                .join(", ");
            emit(cli, json, text);
        }
        Command::Complexity { ideal, a, b } => {
            let m = ab_to_dg(*a, *b)?;
            let i = ideal.load()?;
            let class = cycles::complexity(&i, &m, cli.seed)?;
            let coeffs: Vec<String> = class.coeffs.iter().map(rat_str).collect();
            emit(
                cli,
                serde_json::json!({"q0": coeffs[0], "q1": coeffs[1], "q2": coeffs[2]}),
                format!("complexity = ({}, {}, {})", coeffs[0], coeffs[1], coeffs[2]),
            );
        }
        Command::Limit { ideal, weights, direction } => {
            let i = ideal.load()?;
            let w: Vec<i64> = weights
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse()
                        .map_err(|_| tautocycle::Error::Format(format!("bad weight `{s}`")))
                })
                .collect::<tautocycle::Result<_>>()?;
            let dir = match direction.as_str() {
                "zero" => Direction::ToZero,
                "infinity" => Direction::ToInfinity,
                other => return Err(tautocycle::Error::Format(format!("bad direction `{other}`"))),
            };
            let cutoff = cli.cutoff.unwrap_or(8);
            let lim = degeneration::limit_ideal(&i, &w, dir, cutoff)?;
            let gens: Vec<String> = lim.ideal.generators().iter().map(|g| g.render()).collect();
            let dims: Vec<usize> = lim.pieces.iter().map(|p| p.dim()).collect();
            emit(
                cli,
                serde_json::json!({"generators": gens, "dims": dims, "certified": lim.certified}),
                format!(
                    "limit generators:\n  {}\ncertified: {}",
                    gens.join("\n  "),
                    lim.certified
                ),
            );
        }
        Command::Restrict { ideal, linear } => {
            let i = ideal.load()?;
            let l = ParamForm::parse(linear, i.ring())?;
            let cutoff = cli.cutoff.unwrap_or(8);
            let r = degeneration::restrict_mod_linear(&i, &l, cutoff)?;
            let gens: Vec<String> = r.generators().iter().map(|g| g.render()).collect();
            emit(
                cli,
                serde_json::json!({"vars": r.ring().vars(), "generators": gens}),
                format!("restriction to {:?}:\n  {}", r.ring().vars(), gens.join("\n  ")),
            );
        }
        Command::Star(arg) => {
            let i = arg.load()?;
            let cutoff = cli.cutoff.unwrap_or(8);
            let s = degeneration::star_extension(&i, cutoff)?;
            let gens: Vec<String> = s.generators().iter().map(|g| g.render()).collect();
            emit(
                cli,
                serde_json::json!({"vars": s.ring().vars(), "generators": gens}),
                format!("star extension:\n  {}", gens.join("\n  ")),
            );
        }
        Command::CmSplit(arg) => {
            let i = arg.load()?;
            let cutoff = cli.cutoff.unwrap_or(8);
            let split = structure::cm_split(&i, cutoff)?;
            let cm: Vec<String> = split.cm_part.generators().iter().map(|g| g.render()).collect();
            let punctual: Vec<serde_json::Value> = split
                .punctual
                .iter()
                .map(|(p, q, len)| {
                    serde_json::json!({
                        "point": p.0.iter().map(rat_str).collect::<Vec<_>>(),
                        "primary": q.generators().iter().map(|g| g.render()).collect::<Vec<_>>(),
                        "length": len,
                    })
                })
                .collect();
            let text = format!(
                "CM part: {}\npunctual: {}",
                cm.join(", "),
                if split.punctual.is_empty() {
                    "none".to_string()
                } else {
                    split
                        .punctual
                        .iter()
                        .map(|(p, _, l)| {
                            format!(
                                "length {l} at ({})",
                                p.0.iter().map(rat_str).collect::<Vec<_>>().join(":")
                            )
                        })
                        .collect::<Vec<_>>()
                        .join("; ")
                }
            );
            emit(cli, serde_json::json!({"cm": cm, "punctual": punctual}), text);
        }
        Command::Chow(arg) => {
            let i = arg.load()?;
            let cutoff = cli.cutoff.unwrap_or(8);
            let cycle = structure::hilbert_chow(&i, cutoff)?;
            let comps: Vec<serde_json::Value> = cycle
                .components
                .iter()
                .map(|(p, m)| serde_json::json!({"prime": p, "multiplicity": m}))
                .collect();
            let text = cycle
                .components
                .iter()
                .map(|(p, m)| format!("{m} * V({})", p.join(", ")))
                .collect::<Vec<_>>()
                .join(" + ");
            emit(cli, serde_json::json!({"cycle": comps}), format!("<C> = {text}"));
        }
        Command::Fequiv { ideal, ideal2 } => {
            let a = IdealArg { ideal: ideal.clone() }.load()?;
            let b = IdealArg { ideal: ideal2.clone() }.load()?;
            let cutoff = cli.cutoff.unwrap_or(8);
            let eq = structure::f_equiv(&a, &b, cutoff)?;
            emit(cli, serde_json::json!({"equivalent": eq}), format!("same fiber: {eq}"));
        }
        Command::Gfiber { monomial, factors } => {
            let ring = tautocycle::ring::RingSpec::p2();
            let f = match (monomial, factors) {
                (Some(m), None) => {
                    let form = ParamForm::parse(m, &ring)?;
                    let (mono, _) = form.as_monomial().ok_or_else(|| {
                        tautocycle::Error::Format("--monomial must be a single monomial".into())
                    })?;
                    structure::FactoredForm::Monomial(mono)
                }
                (None, Some(spec)) => {
                    let mut list = Vec::new();
                    for part in spec.split(';') {
                        let (form, mult) = part.rsplit_once(':').ok_or_else(|| {
                            tautocycle::Error::Format(
                                "factors look like `form:mult;form:mult`".into(),
                            )
                        })?;
                        let mult: u32 = mult.trim().parse().map_err(|_| {
                            tautocycle::Error::Format(format!("bad multiplicity `{mult}`"))
                        })?;
                        list.push((ParamForm::parse(form.trim(), &ring)?, mult));
                    }
                    structure::FactoredForm::Factors(list)
                }
                _ => {
                    return Err(tautocycle::Error::Format(
                        "pass exactly one of --monomial or --factors".into(),
                    ))
                }
            };
            let r = structure::g_fiber_count(&f)?;
            emit(
                cli,
                serde_json::json!({"projective_spaces": r}),
                format!("fiber = disjoint union of {r} projective spaces"),
            );
        }
        Command::Project { point, center, plane } => {
            let parse_pt = |s: &str| -> tautocycle::Result<Point> {
                use std::str::FromStr;
                let coords = s
                    .split(',')
                    .map(|c| {
                        Rat::from_str(c.trim()).map_err(|_| {
                            tautocycle::Error::Format(format!("bad coordinate `{c}`"))
                        })
                    })
                    .collect::<tautocycle::Result<Vec<_>>>()?;
                Ok(Point(coords))
            };
            let p = parse_pt(point)?;
            let c = parse_pt(center)?;
            let ring = if p.0.len() == 4 {
                tautocycle::ring::RingSpec::p3()
            } else {
                tautocycle::ring::RingSpec::p2()
            };
            let plane = ParamForm::parse(plane, &ring)?;
            let q = degeneration::project_point(&p, &c, &plane)?;
            let coords: Vec<String> = q.0.iter().map(rat_str).collect();
            emit(
                cli,
                serde_json::json!({"image": coords}),
                format!("image = ({})", coords.join(" : ")),
            );
        }
        Command::Table { a, b } => {
            let m = ab_to_dg(*a, *b)?;
            let t1 = cycles::intersection_table(&m, cli.seed)?;
            let t2 = cycles::hm_intersection_table(&m, cli.seed)?;
            let render = |t: &cycles::TableReport| {
                t.cells
                    .iter()
                    .map(|c| {
                        format!(
                            "({} . {}) = {}{}",
                            c.row,
                            c.col,
                            c.value,
                            if c.value == c.expected { "" } else { "  [MISMATCH]" }
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            let ok = t1.all_match && t2.all_match;
            emit(
                cli,
                serde_json::json!({"dual_basis": t1, "max_regularity_locus": t2, "all_match": ok}),
                format!(
                    "dual basis table:\n{}\n\nmaximal-regularity locus table:\n{}\n\nall match: {ok}",
                    render(&t1),
                    render(&t2)
                ),
            );
            if !ok {
                return Err(tautocycle::Error::CheckFailed("table mismatch".into()));
            }
        }
        Command::Verify { suite, readme } => {
            if suite != "paper" {
                return Err(tautocycle::Error::Format(format!("unknown suite `{suite}`")));
            }
            let results = verify::run_all(cli.seed, Some(readme));
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&results).unwrap());
            } else {
                for r in &results {
                    println!("{}", r.line());
                }
            }
            if results.iter().any(|r| !r.passed) {
                return Err(tautocycle::Error::CheckFailed(
                    "verification suite has failures".into(),
                ));
            }
        }
    }
    Ok(())
}

fn named_family(
    name: &str,
    a: Option<u32>,
    b: Option<u32>,
    d: Option<u32>,
) -> tautocycle::Result<tautocycle::orbits::CycleFamily> {
    match (a, b, d) {
        (Some(a), Some(b), None) => std_family(name, &ab_to_dg(a, b)?),
        (None, None, Some(d)) => std_plane_family(name, d),
        _ => Err(tautocycle::Error::Format(
            "pass --a and --b (space families) or --d (plane families)".into(),
        )),
    }
}

fn parse_combo(spec: &str) -> tautocycle::Result<TautCombo> {
    let mut combo = TautCombo::new();
    for part in spec.split(',') {
        let (n, e) = part
            .split_once(':')
            .ok_or_else(|| tautocycle::Error::Format("combo looks like `7:1,8:-2`".into()))?;
        let n: u32 = n
            .trim()
            .parse()
            .map_err(|_| tautocycle::Error::Format(format!("bad level `{n}`")))?;
        let e: i64 = e
            .trim()
            .parse()
            .map_err(|_| tautocycle::Error::Format(format!("bad exponent `{e}`")))?;
        combo = combo.with(n, e);
    }
    Ok(combo)
}

#[allow(unused)]
fn keep_types(_: Option<MacaulayData>) {}
