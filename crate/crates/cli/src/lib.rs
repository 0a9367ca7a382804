//! Command-line front end. [`run`] parses arguments, dispatches, and
//! returns the exit code with the text for stdout and stderr, so the
//! binary and the tests share one code path.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use cyclic_covers::chargroups::{congruence_index, gamma_lattice, isom_check, uniform_char_index, Parity};
use cyclic_covers::chow::{discriminant_degree, z_bidegree};
use cyclic_covers::covers::{
    build_triple_algebra, build_uniform_algebra, generate_verified_witness, is_smooth_triple, is_smooth_uniform,
    CoverAlgebra, TripleCoverSpec, UniformCoverSpec,
};
use cyclic_covers::exact::Field;
use cyclic_covers::forms::{Form, SearchOptions};
use cyclic_covers::picard::{big_json, hyperelliptic_picard, picard_uniform, stack_dimension, triple_picard, StackKind};
use cyclic_covers::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "cyclic-covers", version, about = "Exact invariants of moduli of cyclic covers")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized steps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Picard groups of moduli stacks of covers.
    #[command(subcommand)]
    Picard(PicardCmd),
    /// Degree of the discriminant of forms of degree m in n + 1 variables.
    DiscDegree {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
    },
    /// Bidegree of the locus of pairs of branch forms with a common root.
    ZBidegree {
        #[arg(long)]
        d1: u32,
        #[arg(long)]
        d2: u32,
    },
    /// Character lattices.
    #[command(subcommand)]
    Char(CharCmd),
    /// Smoothness of a cover from its branch forms.
    #[command(subcommand)]
    Smooth(SmoothCmd),
    /// Cover algebras.
    #[command(subcommand)]
    Cover(CoverCmd),
    /// Generators of test data.
    #[command(subcommand)]
    Gen(GenCmd),
    /// Dimensions of moduli stacks.
    #[command(subcommand)]
    Dim(DimCmd),
}

#[derive(Args, Debug, Clone, Copy)]
struct UniformParams {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    r: u32,
    #[arg(long)]
    d: u32,
}

#[derive(Args, Debug, Clone, Copy)]
struct TripleParams {
    #[arg(long)]
    d1: u32,
    #[arg(long)]
    d2: u32,
}

#[derive(Subcommand, Debug)]
enum PicardCmd {
    Uniform(UniformParams),
    Triple(TripleParams),
    Hyperelliptic {
        #[arg(long)]
        g: u32,
    },
}

#[derive(Subcommand, Debug)]
enum CharCmd {
    /// Basis of the character lattice of the triple-cover group.
    Lattice(TripleParams),
    /// Index d / gcd(d, n + 1) of the uniform character lattice.
    Index {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
    },
    /// Randomized check of the closed-form isomorphism for GL_{n+1}/mu_d.
    Isom {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value = "101")]
        field: String,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

#[derive(Subcommand, Debug)]
enum SmoothCmd {
    Uniform {
        /// Form file of the branch form, of degree r d in n + 1 variables.
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        field: Option<String>,
        #[arg(long, default_value_t = 1)]
        ext_bound: u32,
    },
    Triple {
        #[arg(long)]
        f1: PathBuf,
        #[arg(long)]
        f2: PathBuf,
        #[arg(long)]
        field: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum CoverCmd {
    #[command(subcommand)]
    Algebra(AlgebraCmd),
}

#[derive(Subcommand, Debug)]
enum AlgebraCmd {
    Uniform {
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        field: Option<String>,
    },
    Triple {
        #[arg(long)]
        f1: PathBuf,
        #[arg(long)]
        f2: PathBuf,
        /// Product t1 t2; defaults to f1 f2.
        #[arg(long)]
        h: Option<PathBuf>,
        #[arg(long)]
        field: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum GenCmd {
    /// A degree-m hypersurface in P^n with exactly one singular point.
    Witness {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        field: String,
        #[arg(long, default_value_t = 1)]
        ext_bound: u32,
        #[arg(long, default_value_t = 20)]
        max_attempts: u32,
    },
}

#[derive(Subcommand, Debug)]
enum DimCmd {
    Uniform(UniformParams),
    Triple(TripleParams),
}

/// Exit code, stdout, stderr.
pub type Outcome = (i32, String, String);

struct Output {
    value: Value,
    text: String,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() { (2, String::new(), rendered) } else { (0, rendered, String::new()) };
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            let stdout = if cli.json {
                let mut s = serde_json::to_string_pretty(&out.value).expect("values serialize");
                s.push('\n');
                s
            } else {
                out.text
            };
            (0, stdout, String::new())
        }
        Err(e) => (1, String::new(), format!("{e}\n")),
    }
}

fn field_arg(spec: Option<&str>) -> Result<Field, Error> {
    spec.map_or(Ok(Field::Rational), Field::parse)
}

fn read_form(path: &Path, field: &Field) -> Result<Form, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
    let target = (*field != Field::Rational).then_some(field);
    Form::parse(&text, target)
}

fn dispatch(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Picard(cmd) => {
            let result = match *cmd {
                PicardCmd::Uniform(UniformParams { n, r, d }) => picard_uniform(n, r, d)?,
                PicardCmd::Triple(TripleParams { d1, d2 }) => triple_picard(d1, d2)?,
                PicardCmd::Hyperelliptic { g } => hyperelliptic_picard(g)?,
            };
            Ok(Output { value: result.to_json(), text: result.to_string() })
        }
        Command::DiscDegree { n, m } => {
            if *n == 0 || *m < 2 {
                return Err(Error::InvalidParameter(format!("need n >= 1 and m >= 2, got ({n}, {m})")));
            }
            let deg = discriminant_degree(*n, *m);
            Ok(Output { text: format!("{deg}\n"), value: json!({"n": n, "m": m, "degree": big_json(&deg)}) })
        }
        Command::ZBidegree { d1, d2 } => {
            let (a, b) = z_bidegree(*d1, *d2)?;
            Ok(Output {
                text: format!("({a}, {b})\n"),
                value: json!({"d1": d1, "d2": d2, "bidegree": [big_json(&a), big_json(&b)]}),
            })
        }
        Command::Char(cmd) => char_cmd(cmd, cli.seed),
        Command::Smooth(cmd) => smooth_cmd(cmd),
        Command::Cover(CoverCmd::Algebra(cmd)) => algebra_cmd(cmd),
        Command::Gen(GenCmd::Witness { n, m, field, ext_bound, max_attempts }) => {
            let field = Field::parse(field)?;
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let options = SearchOptions::new(*ext_bound);
            let (w, check, attempts) = generate_verified_witness(*n, *m, &field, &mut rng, *max_attempts, options)?;
            let coords: Vec<String> = w.point.iter().map(|c| c.value_string()).collect();
            let coefficients: Vec<String> = w.coefficients.iter().map(|c| c.value_string()).collect();
            let mut text = String::new();
            writeln!(text, "# singular at ({}) over {field}", coords.join(":")).unwrap();
            writeln!(text, "# linear rank {}, attempts {attempts}, ext bound {ext_bound}", check.linear_rank).unwrap();
            text.push_str(&w.form.to_text());
            Ok(Output {
                text,
                value: json!({
                    "n": n,
                    "m": m,
                    "field": field.to_string(),
                    "form": w.form.to_text(),
                    "point": coords,
                    "coefficients": coefficients,
                    "linear_rank": check.linear_rank,
                    "extra_points": check.extra_points.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "ext_bound": ext_bound,
                    "attempts": attempts,
                    "passed": check.passed,
                }),
            })
        }
        Command::Dim(cmd) => {
            let (kind, params, stack) = match *cmd {
                DimCmd::Uniform(UniformParams { n, r, d }) => {
                    if n == 0 || r == 0 || d == 0 {
                        return Err(Error::InvalidParameter(format!("n, r, d must be positive, got ({n}, {r}, {d})")));
                    }
                    ("uniform", json!({"n": n, "r": r, "d": d}), StackKind::Uniform { n, r, d })
                }
                DimCmd::Triple(TripleParams { d1, d2 }) => {
                    cyclic_covers::covers::branch_form_degrees(d1, d2)?;
                    ("triple", json!({"d1": d1, "d2": d2}), StackKind::Triple { d1, d2 })
                }
            };
            let dim = stack_dimension(stack);
            Ok(Output { text: format!("{dim}\n"), value: json!({"kind": kind, "params": params, "dimension": big_json(&dim)}) })
        }
    }
}

fn int(x: i128) -> Value {
    big_json(&x.into())
}

fn char_cmd(cmd: &CharCmd, seed: u64) -> Result<Output, Error> {
    match cmd {
        CharCmd::Lattice(TripleParams { d1, d2 }) => {
            let l = gamma_lattice(*d1, *d2)?;
            let index = congruence_index(*d1, *d2);
            let parity = match l.parity {
                Parity::OddD1 => "odd_d1",
                Parity::BothEven => "both_even",
            };
            let text = format!(
                "v1 = {} e1 + {} e2\nv2 = {} e1 + {} e2\nindex {index} in the e-lattice\n",
                l.v1.0, l.v1.1, l.v2.0, l.v2.1
            );
            let value = json!({
                "d1": d1,
                "d2": d2,
                "parity": parity,
                "v1": [int(l.v1.0), int(l.v1.1)],
                "v2": [int(l.v2.0), int(l.v2.1)],
                "index": big_json(&index),
            });
            Ok(Output { text, value })
        }
        CharCmd::Index { n, d } => {
            if *n == 0 || *d == 0 {
                return Err(Error::InvalidParameter(format!("n and d must be positive, got ({n}, {d})")));
            }
            let index = uniform_char_index(*n, *d);
            Ok(Output { text: format!("{index}\n"), value: json!({"n": n, "d": d, "index": index}) })
        }
        CharCmd::Isom { n, d, field, samples } => {
            let field = Field::parse(field)?;
            let report = isom_check(*n, *d, *samples, &field, seed)?;
            let case = format!("{:?}", report.case);
            let text = format!(
                "case {case}, q = {}: multiplicative {}, kernel mu_d {}, injective on samples {}\n{}\n",
                report.q,
                report.multiplicative,
                report.kernel_is_mu_d,
                report.injective_on_samples,
                if report.passed { "passed" } else { "failed" }
            );
            let value = json!({
                "n": n,
                "d": d,
                "field": field.to_string(),
                "case": case,
                "q": report.q,
                "samples": report.samples,
                "multiplicative": report.multiplicative,
                "kernel_is_mu_d": report.kernel_is_mu_d,
                "injective_on_samples": report.injective_on_samples,
                "passed": report.passed,
                "witness": report.witness,
            });
            Ok(Output { text, value })
        }
    }
}

fn smooth_cmd(cmd: &SmoothCmd) -> Result<Output, Error> {
    let verdict = match cmd {
        SmoothCmd::Uniform { form, r, field, ext_bound } => {
            let field = field_arg(field.as_deref())?;
            let spec = UniformCoverSpec::from_form(*r, read_form(form, &field)?)?;
            is_smooth_uniform(&spec, SearchOptions::new(*ext_bound))?
        }
        SmoothCmd::Triple { f1, f2, field } => {
            let field = field_arg(field.as_deref())?;
            let spec = TripleCoverSpec::from_forms(read_form(f1, &field)?, read_form(f2, &field)?)?;
            is_smooth_triple(&spec)?
        }
    };
    Ok(Output { text: format!("{verdict}\n"), value: verdict.to_json() })
}

fn algebra_text(alg: &CoverAlgebra) -> String {
    let mut text = String::new();
    let labels = alg.labels();
    for i in 0..alg.rank() {
        for j in i..alg.rank() {
            let terms: Vec<String> = alg
                .product(i, j)
                .iter()
                .zip(labels)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, l)| format!("({c}) {l}"))
                .collect();
            let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            writeln!(text, "{} * {} = {rhs}", labels[i], labels[j]).unwrap();
        }
    }
    text
}

fn algebra_cmd(cmd: &AlgebraCmd) -> Result<Output, Error> {
    match cmd {
        AlgebraCmd::Uniform { form, r, field } => {
            let field = field_arg(field.as_deref())?;
            let spec = UniformCoverSpec::from_form(*r, read_form(form, &field)?)?;
            let alg = build_uniform_algebra(&spec);
            Ok(Output { text: algebra_text(&alg), value: alg.to_json() })
        }
        AlgebraCmd::Triple { f1, f2, h, field } => {
            let field = field_arg(field.as_deref())?;
            let (f1, f2) = (read_form(f1, &field)?, read_form(f2, &field)?);
            let h = h.as_deref().map(|p| read_form(p, &field)).transpose()?;
            let (alg, audit) = build_triple_algebra(&f1, &f2, h.as_ref().map(Form::poly))?;
            let mut text = algebra_text(&alg);
            writeln!(text, "associative: {}", audit.is_associative()).unwrap();
            let mut value = alg.to_json();
            value["associative"] = json!(audit.is_associative());
            value["associator_failures"] = json!(audit
                .failures
                .iter()
                .map(|((i, j, k), _)| [alg.labels()[*i].clone(), alg.labels()[*j].clone(), alg.labels()[*k].clone()])
                .collect::<Vec<_>>());
            Ok(Output { text, value })
        }
    }
}
