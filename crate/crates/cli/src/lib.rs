//! File formats, the expression language and the `subshift` command line.

pub mod error;
pub mod expr;
pub mod files;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use subshift_core::bratteli::{BratteliDiagram, K0Presentation, Tower};
use subshift_core::conjugacy::{self, ConjugacyMaps};
use subshift_core::verify::{self, Report};
use subshift_core::{BasicSet, CylinderAlgebra, Level, StarCalculus, Subshift};

pub use error::{CliError, Result};

#[derive(Parser, Debug)]
#[command(
    name = "subshift",
    version,
    about = "Exact computations in the snapshot algebras of a subshift"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TowerArg {
    A,
    Diagonal,
}

impl TowerArg {
    fn tower(self) -> Tower {
        match self {
            TowerArg::A => Tower::A,
            TowerArg::Diagonal => Tower::Diagonal,
        }
    }

    fn name(self) -> &'static str {
        match self {
            TowerArg::A => "A",
            TowerArg::Diagonal => "diagonal",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Relations,
    Lemmas,
    Bprime,
    All,
}

#[derive(Args, Debug)]
pub struct ShiftArg {
    #[arg(long)]
    pub shift: PathBuf,
}

#[derive(Args, Debug)]
pub struct DepthArg {
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    pub depth: u32,
}

fn parse_level(s: &str) -> std::result::Result<(usize, usize), String> {
    let (k, l) = s.split_once(',').ok_or("expected K,L")?;
    let k = k.trim().parse().map_err(|_| format!("bad K in {s:?}"))?;
    let l = l.trim().parse().map_err(|_| format!("bad L in {s:?}"))?;
    Ok((k, l))
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Words of the language of a given length.
    Lang {
        #[command(flatten)]
        shift: ShiftArg,
        #[command(flatten)]
        depth: DepthArg,
    },
    /// Atoms of the algebra at level K,L.
    Atoms {
        #[command(flatten)]
        shift: ShiftArg,
        #[arg(long, value_parser = parse_level)]
        level: (usize, usize),
    },
    /// Bratteli diagram of a tower.
    Bratteli {
        #[command(flatten)]
        shift: ShiftArg,
        #[arg(long, value_enum, default_value_t = TowerArg::A)]
        tower: TowerArg,
        #[command(flatten)]
        depth: DepthArg,
    },
    /// K0 data of a tower.
    K0 {
        #[command(flatten)]
        shift: ShiftArg,
        #[arg(long, value_enum, default_value_t = TowerArg::A)]
        tower: TowerArg,
        #[command(flatten)]
        depth: DepthArg,
    },
    /// Normal form of an expression.
    Rewrite {
        #[command(flatten)]
        shift: ShiftArg,
        expression: String,
        /// Compare with a second expression; exit 1 if they differ.
        #[arg(long)]
        assert_equal: Option<String>,
    },
    /// Replay the generator relations.
    Verify {
        #[command(flatten)]
        shift: ShiftArg,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[command(flatten)]
        depth: DepthArg,
    },
    /// Block-code conjugacies.
    Conj {
        #[command(subcommand)]
        action: ConjAction,
    },
}

#[derive(Args, Debug)]
pub struct ConjFiles {
    /// Source shift X.
    #[arg(long)]
    pub shift: PathBuf,
    /// Target shift Y.
    #[arg(long)]
    pub target: PathBuf,
    /// Block code X -> Y.
    #[arg(long)]
    pub code: Option<PathBuf>,
    /// Block code Y -> X.
    #[arg(long)]
    pub inverse: Option<PathBuf>,
    #[command(flatten)]
    pub depth: DepthArg,
}

#[derive(Subcommand, Debug)]
pub enum ConjAction {
    /// Check that the two codes are mutually inverse.
    Verify(ConjFiles),
    /// Print the induced images of cylinders and generators.
    Apply(ConjFiles),
    /// Print invariants side by side.
    Compare(ConjFiles),
}

/// What a command printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub exit: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, exit: 0 }
    }

    fn verdict(stdout: String, passed: bool) -> Self {
        Outcome {
            stdout,
            exit: if passed { 0 } else { 1 },
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct LanguageOutput {
    pub length: usize,
    pub count: usize,
    pub words: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct AtomOutput {
    pub nu: String,
    pub class: usize,
    /// Words of length at most `l` that may precede the tail.
    pub left_extensions: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct AtomsOutput {
    pub k: usize,
    pub l: usize,
    pub count: usize,
    pub atoms: Vec<AtomOutput>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct BratteliOutput {
    pub tower: String,
    pub diagram: BratteliDiagram,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct K0Output {
    pub tower: String,
    pub group: String,
    pub presentation: K0Presentation,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct RewriteOutput {
    pub expression: String,
    pub normal_form: Vec<String>,
    pub other: Option<RewriteSide>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct RewriteSide {
    pub expression: String,
    pub normal_form: Vec<String>,
    pub equal: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ImageOutput {
    pub input: String,
    pub image: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ApplyOutput {
    pub cylinders: Vec<ImageOutput>,
    pub generators: Vec<ImageOutput>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ConjVerifyOutput {
    pub certified: bool,
    pub report: Report,
}

/// Reads `SUBSHIFT_MAX_ATOMS`.
fn algebra(shift: Subshift) -> Result<CylinderAlgebra> {
    match std::env::var("SUBSHIFT_MAX_ATOMS") {
        Ok(v) => {
            let cap = v.trim().parse().map_err(|_| {
                CliError::Usage(format!("SUBSHIFT_MAX_ATOMS={v:?} is not a number"))
            })?;
            Ok(CylinderAlgebra::with_max_atoms(shift, cap))
        }
        Err(_) => Ok(CylinderAlgebra::new(shift)),
    }
}

fn emit<T: Serialize>(format: Format, value: &T, human: impl FnOnce() -> String) -> String {
    match format {
        Format::Human => human(),
        Format::Json => serde_json::to_string_pretty(value).expect("serializable") + "\n",
    }
}

fn lines(v: &[String]) -> String {
    v.iter().map(|l| format!("{l}\n")).collect()
}

/// Parses arguments and runs one command. Clap errors come back as
/// `Err` with the rendered message.
pub fn run<I, T>(args: I) -> std::result::Result<Outcome, (String, u8)>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Err((e.render().to_string(), code));
        }
    };
    execute(&cli).map_err(|e| (format!("error: {e}\n"), e.exit_code()))
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let format = cli.format;
    match &cli.command {
        Command::Lang { shift, depth } => {
            let x = files::load_shift(&shift.shift)?;
            let k = depth.depth as usize;
            let words: Vec<String> = x
                .enumerate_language(k)
                .iter()
                .map(|w| x.alphabet().format_word(w))
                .collect();
            let out = LanguageOutput {
                length: k,
                count: words.len(),
                words,
            };
            Ok(Outcome::ok(emit(format, &out, || {
                format!("L^{k}: {} words\n{}", out.count, lines(&out.words))
            })))
        }
        Command::Atoms { shift, level } => {
            let alg = algebra(files::load_shift(&shift.shift)?)?;
            let level = Level::new(level.0, level.1)?;
            let alphabet = alg.shift().alphabet();
            let atoms: Vec<AtomOutput> = alg
                .atoms(level)?
                .iter()
                .map(|a| AtomOutput {
                    nu: alphabet.format_word(&a.nu),
                    class: a.cls,
                    left_extensions: alg
                        .class_left_extensions(level.l, a.cls)
                        .iter()
                        .map(|w| alphabet.format_word(w))
                        .collect(),
                })
                .collect();
            let out = AtomsOutput {
                k: level.k,
                l: level.l,
                count: atoms.len(),
                atoms,
            };
            Ok(Outcome::ok(emit(format, &out, || {
                let mut s = format!("level {level}: {} atoms\n", out.count);
                for a in &out.atoms {
                    s += &format!(
                        "  {}·E{}.{}  preceded by {{{}}}\n",
                        a.nu,
                        level.l,
                        a.class,
                        a.left_extensions.join(", ")
                    );
                }
                s
            })))
        }
        Command::Bratteli {
            shift,
            tower,
            depth,
        } => {
            let alg = algebra(files::load_shift(&shift.shift)?)?;
            let diagram = BratteliDiagram::build(&alg, tower.tower(), depth.depth as usize)?;
            let out = BratteliOutput {
                tower: tower.name().into(),
                diagram,
            };
            Ok(Outcome::ok(emit(format, &out, || {
                report::bratteli(&out.tower, &out.diagram)
            })))
        }
        Command::K0 {
            shift,
            tower,
            depth,
        } => {
            let alg = algebra(files::load_shift(&shift.shift)?)?;
            let diagram = BratteliDiagram::build(&alg, tower.tower(), depth.depth as usize)?;
            let presentation = K0Presentation::from_diagram(&diagram);
            let out = K0Output {
                tower: tower.name().into(),
                group: presentation.describe(),
                presentation,
            };
            Ok(Outcome::ok(emit(format, &out, || {
                report::k0(&out.tower, &out.presentation)
            })))
        }
        Command::Rewrite {
            shift,
            expression,
            assert_equal,
        } => {
            let alg = algebra(files::load_shift(&shift.shift)?)?;
            let calc = StarCalculus::new(&alg);
            let x = expr::parse(&calc, expression)?;
            let mut out = RewriteOutput {
                expression: expression.clone(),
                normal_form: calc.render(&x)?,
                other: None,
            };
            if let Some(other) = assert_equal {
                let y = expr::parse(&calc, other)?;
                out.other = Some(RewriteSide {
                    expression: other.clone(),
                    normal_form: calc.render(&y)?,
                    equal: calc.equal(&x, &y)?,
                });
            }
            let passed = out.other.as_ref().is_none_or(|o| o.equal);
            Ok(Outcome::verdict(
                emit(format, &out, || {
                    let mut s = lines(&out.normal_form);
                    if let Some(o) = &out.other {
                        s = format!(
                            "{}\n{}{}\n{}",
                            out.expression,
                            s,
                            o.expression,
                            lines(&o.normal_form)
                        );
                        s += if o.equal { "equal\n" } else { "not equal\n" };
                    }
                    s
                }),
                passed,
            ))
        }
        Command::Verify {
            shift,
            suite,
            depth,
        } => {
            let alg = algebra(files::load_shift(&shift.shift)?)?;
            let d = depth.depth as usize;
            let r = match suite {
                Suite::Relations => verify::verify_relations(&alg, d)?,
                Suite::Lemmas => verify::verify_lemmas(&alg, d)?,
                Suite::Bprime => verify::verify_b_prime(&alg, d)?,
                Suite::All => verify::verify_all(&alg, d)?,
            };
            Ok(Outcome::verdict(
                emit(format, &r, || report::report(&r)),
                r.passed(),
            ))
        }
        Command::Conj { action } => conj(format, action),
    }
}

struct Loaded {
    x: Subshift,
    y: Subshift,
    codes: Option<(subshift_core::BlockCode, subshift_core::BlockCode)>,
}

fn load_pair(f: &ConjFiles, need_codes: bool) -> Result<Loaded> {
    let x = files::load_shift(&f.shift)?;
    let y = files::load_shift(&f.target)?;
    let codes = match (&f.code, &f.inverse) {
        (Some(c), Some(i)) => Some((files::load_code(c, &x, &y)?, files::load_code(i, &y, &x)?)),
        (None, None) if !need_codes => None,
        _ => {
            return Err(CliError::Usage(
                "--code and --inverse must be given together".into(),
            ))
        }
    };
    Ok(Loaded { x, y, codes })
}

fn conj(format: Format, action: &ConjAction) -> Result<Outcome> {
    match action {
        ConjAction::Verify(f) => {
            let l = load_pair(f, true)?;
            let (c, i) = l.codes.expect("required");
            let report = conjugacy::check_conjugacy(&l.x, &l.y, &c, &i, f.depth.depth as usize);
            let out = ConjVerifyOutput {
                certified: report.passed(),
                report,
            };
            Ok(Outcome::verdict(
                emit(format, &out, || {
                    let verdict = if out.certified {
                        "certificate issued"
                    } else {
                        "no certificate"
                    };
                    format!("{}{verdict}\n", report::report(&out.report))
                }),
                out.certified,
            ))
        }
        ConjAction::Apply(f) => {
            let l = load_pair(f, true)?;
            let (c, i) = l.codes.expect("required");
            let d = f.depth.depth as usize;
            let cert = match conjugacy::verify_conjugacy(&l.x, &l.y, &c, &i, d) {
                Ok(cert) => cert,
                Err(e) => return Ok(Outcome::verdict(format!("no certificate: {e}\n"), false)),
            };
            let (ax, ay) = (algebra(l.x)?, algebra(l.y)?);
            let maps = ConjugacyMaps::new(&ax, &ay, &cert);
            let calc = StarCalculus::new(&ax);
            let ya = ay.shift().alphabet();
            let mut cylinders = Vec::new();
            for mu in ay.shift().language_up_to(d) {
                let img = maps.psi(&ay.basic(&BasicSet::cylinder(mu.clone()))?)?;
                cylinders.push(ImageOutput {
                    input: format!("C({})", ya.format_word(&mu)),
                    image: calc.render(&calc.diag(&img)?)?,
                });
            }
            let mut generators = Vec::new();
            for (a, img) in ya.symbols().zip(maps.generator_images()?) {
                generators.push(ImageOutput {
                    input: format!("S({})", ya.token(a)),
                    image: calc.render(&img)?,
                });
            }
            let out = ApplyOutput {
                cylinders,
                generators,
            };
            Ok(Outcome::ok(emit(format, &out, || {
                let mut s = String::from("Psi on cylinders of the target:\n");
                for c in &out.cylinders {
                    s += &format!("  {} -> {}\n", c.input, c.image.join(" + "));
                }
                s += "generator images:\n";
                for g in &out.generators {
                    s += &format!("  {} -> {}\n", g.input, g.image.join(" + "));
                }
                s
            })))
        }
        ConjAction::Compare(f) => {
            let l = load_pair(f, false)?;
            let d = f.depth.depth as usize;
            let cert = match l.codes {
                Some((c, i)) => match conjugacy::verify_conjugacy(&l.x, &l.y, &c, &i, d) {
                    Ok(cert) => Some(cert),
                    Err(e) => return Ok(Outcome::verdict(format!("no certificate: {e}\n"), false)),
                },
                None => None,
            };
            let (ax, ay) = (algebra(l.x)?, algebra(l.y)?);
            let cmp = conjugacy::compare_invariants(&ax, &ay, d, cert.as_ref())?;
            let passed = cmp.isomorphism.as_ref().is_none_or(Report::passed);
            Ok(Outcome::verdict(
                emit(format, &cmp, || report::comparison(&cmp)),
                passed,
            ))
        }
    }
}
