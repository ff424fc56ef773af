//! The `hopfkit` command line.
//!
//! Exit codes: 0 when every check passes (or a solver found a solution),
//! 1 on a verified failure or infeasibility, 2 on input errors.

use std::io::Read;

use clap::{Args, Parser, Subcommand};

use crate::actions::{
    check_bicomodule_algebra, check_comodule_algebra, check_module_coalgebra, check_right_module,
    RightModule,
};
use crate::dk::{self, DkDatum};
use crate::error::{Error, Result};
use crate::format::{matrix_rows, Structure, Workspace};
use crate::gallery;
use crate::kernel::{Field, Tensor};
use crate::report::{Check, Format, Report, Witness};
use crate::structures::{check_algebra, check_bialgebra, check_coalgebra, check_hopf, Algebra};
use crate::yd::{self, YdDatum};

#[derive(Parser, Debug)]
#[command(name = "hopfkit", version, about = "Exact checks and solvers for Hopf-algebraic structure constants")]
struct Cli {
    /// Ground field: `Q` or `gf:<p>`. Overrides the field declared in files.
    #[arg(long, global = true)]
    field: Option<Field>,
    /// Output format: `json` or `table`.
    #[arg(long, global = true, default_value = "table")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every structure in a file against its axioms.
    Verify {
        /// Only check the (last, or `--name`d) Hopf algebra.
        #[arg(long)]
        hopf: bool,
        #[arg(long)]
        name: Option<String>,
        file: String,
    },
    /// Solve for the antipode of the bialgebra in a file.
    SolveAntipode {
        #[arg(long)]
        name: Option<String>,
        file: String,
    },
    /// Doi-Koppinen data.
    #[command(subcommand)]
    Dk(DkCommand),
    /// Yetter-Drinfel'd data over a bicomodule algebra.
    #[command(subcommand)]
    Yd(YdCommand),
    /// Built-in examples.
    #[command(subcommand)]
    Gallery(GalleryCommand),
}

#[derive(Args, Debug)]
struct DkInput {
    /// File holding the datum.
    #[arg(long)]
    datum: String,
    /// Name of the datum inside the file; defaults to the last one.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Subcommand, Debug)]
enum DkCommand {
    /// Check the datum and every Doi-Koppinen module in the file.
    Verify(DkInput),
    /// Solve for an integral `γ: C → Hom(C, A)`.
    SolveIntegral {
        #[command(flatten)]
        input: DkInput,
        #[arg(long)]
        total: bool,
    },
    /// Build the splitting `λ: C ⊗ M → M` of a module from a total integral.
    Lambda {
        #[command(flatten)]
        input: DkInput,
        #[arg(long)]
        module: String,
    },
    /// Check the smash product against the Koppinen product.
    Smash(DkInput),
}

#[derive(Args, Debug)]
struct YdInput {
    /// File holding the Hopf algebra and bicomodule algebra.
    #[arg(long)]
    ha: String,
    #[arg(long)]
    name: Option<String>,
}

#[derive(Subcommand, Debug)]
enum YdCommand {
    /// Check the datum and every Yetter-Drinfel'd module in the file.
    Verify(YdInput),
    /// Build and check the Verma module `H ⊗ A`.
    Verma(YdInput),
    /// Solve for a quantum integral.
    SolveQuantumIntegral {
        #[command(flatten)]
        input: YdInput,
        #[arg(long)]
        total: bool,
    },
    /// Compute the coinvariant subalgebra `B`.
    Coinvariants(YdInput),
    /// Decide whether the canonical map `β` is bijective.
    GaloisCheck(YdInput),
    /// Check the hypotheses and the unit/counit on witness modules.
    Affineness {
        #[command(flatten)]
        input: YdInput,
        /// File of `yd_module` and `module` entries; `B` names the
        /// coinvariant subalgebra.
        #[arg(long)]
        witnesses: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum GalleryCommand {
    List,
    Export { name: String },
}

/// Runs one invocation; returns the exit code and the text to print.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(e @ Error::AxiomViolation { .. }) => (1, format!("error: {e}\n")),
        Err(e) => (2, format!("error: {e}\n")),
    }
}

fn read_input(path: &str) -> Result<String> {
    let mut s = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut s)?;
    } else {
        s = std::fs::read_to_string(path)?;
    }
    Ok(s)
}

fn load(path: &str, field: Option<Field>) -> Result<Workspace> {
    Workspace::load(&read_input(path)?, field)
}

fn emit(r: &Report, format: Format, ok: bool) -> (i32, String) {
    (if ok { 0 } else { 1 }, r.render(format))
}

fn prefixed(r: Report, name: &str) -> Report {
    let mut out = Report::new();
    for mut c in r.checks {
        c.id = format!("{name}.{}", c.id);
        out.push(c);
    }
    out.metadata = r.metadata;
    out
}

fn over_algebra<'a>(w: &'a Workspace, name: &str) -> Result<&'a Algebra> {
    match w.get(name) {
        Some(Structure::Algebra(a)) => Ok(a),
        Some(Structure::Hopf(h)) => Ok(h.algebra()),
        Some(Structure::ComoduleAlgebra { value, .. }) => Ok(&value.algebra),
        Some(Structure::BicomoduleAlgebra { value, .. }) => Ok(&value.algebra),
        Some(s) => Err(Error::Format { location: name.into(), message: format!("is a {}, not an algebra", s.kind()) }),
        None => Err(Error::UnknownReference(name.into())),
    }
}

fn verify_structure(w: &Workspace, s: &Structure) -> Result<Report> {
    Ok(match s {
        Structure::Algebra(a) => check_algebra(a),
        Structure::Coalgebra(c) => check_coalgebra(c),
        Structure::Hopf(h) => {
            let mut r = check_bialgebra(h.bialgebra());
            r.absorb(check_hopf(h));
            r
        }
        Structure::ComoduleAlgebra { over, value } => check_comodule_algebra(w.hopf(over)?, value),
        Structure::ModuleCoalgebra { over, value } => check_module_coalgebra(w.hopf(over)?, value),
        Structure::BicomoduleAlgebra { over, value } => check_bicomodule_algebra(w.hopf(over)?, value),
        Structure::DkDatum { value, .. } => value.check(),
        Structure::YdDatum { value, .. } => value.check(),
        Structure::Module { over, value } => check_right_module(over_algebra(w, over)?, value),
        Structure::DkModule { datum, value } => dk::check_dk_module(w.dk_datum(datum)?, value),
        Structure::YdModule { datum, value } => yd::check_yd_module(w.yd_datum(datum)?, value),
    })
}

fn gamma_text(gamma: &Tensor, c_basis: &[String], a_basis: &[String]) -> String {
    let terms: Vec<String> = gamma
        .nonzeros()
        .map(|(i, x)| format!("γ({})({}) = {}·{}", c_basis[i[0]], c_basis[i[1]], x, a_basis[i[2]]))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("; ")
    }
}

fn dispatch(cli: &Cli) -> Result<(i32, String)> {
    let fmt = cli.format;
    match &cli.command {
        Command::Verify { hopf, name, file } => {
            let w = load(file, cli.field)?;
            let r = if *hopf || name.is_some() {
                let kinds: &[&str] = if *hopf { &["hopf"] } else { &[
                    "algebra", "coalgebra", "hopf", "comodule_algebra", "module_coalgebra",
                    "bicomodule_algebra", "dk_datum", "yd_datum", "module", "dk_module", "yd_module",
                ] };
                let (_, s) = w.select(name.as_deref(), kinds)?;
                verify_structure(&w, s)?
            } else {
                let mut r = Report::new();
                for (n, s) in &w.items {
                    r.absorb(prefixed(verify_structure(&w, s)?, n));
                }
                r
            };
            Ok(emit(&r, fmt, r.passed()))
        }
        Command::SolveAntipode { name, file } => {
            let w = load(file, cli.field)?;
            let (_, s) = w.select(name.as_deref(), &["hopf"])?;
            let Structure::Hopf(h) = s else { unreachable!("selected by kind") };
            let mut r = check_bialgebra(h.bialgebra());
            match crate::structures::solve_antipode(h.bialgebra()) {
                Some(sol) => {
                    r.push(Check::pass("antipode_exists", "S * Id = Id * S = ηε has a solution", ""));
                    let rows: Vec<String> = matrix_rows(&sol).iter().map(|row| format!("[{}]", row.join(", "))).collect();
                    r.set_meta("antipode", rows.join(" "));
                }
                None => r.push(Check::fail(
                    "antipode_exists",
                    "S * Id = Id * S = ηε has a solution",
                    Witness::counts(0, 1),
                    "no antipode: the convolution system is inconsistent",
                )),
            }
            Ok(emit(&r, fmt, r.passed()))
        }
        Command::Dk(c) => dk_command(c, cli.field, fmt),
        Command::Yd(c) => yd_command(c, cli.field, fmt),
        Command::Gallery(GalleryCommand::List) => {
            let out = match fmt {
                Format::Json => {
                    let v: Vec<_> = gallery::entries()
                        .iter()
                        .map(|e| {
                            serde_json::json!({
                                "name": e.name, "kind": e.kind, "description": e.description,
                                "properties": e.properties.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect::<std::collections::BTreeMap<_, _>>(),
                            })
                        })
                        .collect();
                    serde_json::to_string_pretty(&v)? + "\n"
                }
                Format::Table => gallery::entries()
                    .iter()
                    .map(|e| {
                        let props: Vec<String> = e.properties.iter().map(|(k, v)| format!("{k}: {v}")).collect();
                        format!("{:20} {:10} {}  [{}]\n", e.name, e.kind, e.description, props.join(", "))
                    })
                    .collect(),
            };
            Ok((0, out))
        }
        Command::Gallery(GalleryCommand::Export { name }) => {
            let w = gallery::build(name, cli.field.unwrap_or(Field::Rationals))?;
            Ok((0, w.to_json() + "\n"))
        }
    }
}

/// Loads the datum and fails with its report when the axioms do not hold.
fn dk_datum(input: &DkInput, field: Option<Field>) -> Result<(Workspace, String, std::result::Result<DkDatum, Report>)> {
    let w = load(&input.datum, field)?;
    let (n, _) = w.select(input.name.as_deref(), &["dk_datum"])?;
    let n = n.to_string();
    let d = w.dk_datum(&n)?.clone();
    let r = d.check();
    let d = if r.passed() { Ok(d) } else { Err(prefixed(r, &n)) };
    Ok((w, n, d))
}

fn dk_command(c: &DkCommand, field: Option<Field>, fmt: Format) -> Result<(i32, String)> {
    match c {
        DkCommand::Verify(input) => {
            let (w, n, d) = dk_datum(input, field)?;
            let d = match d {
                Ok(d) => d,
                Err(r) => return Ok(emit(&r, fmt, false)),
            };
            let mut r = prefixed(d.check(), &n);
            for (mn, s) in &w.items {
                if let Structure::DkModule { datum, value } = s {
                    if datum == &n {
                        r.absorb(prefixed(dk::check_dk_module(&d, value), mn));
                    }
                }
            }
            Ok(emit(&r, fmt, r.passed()))
        }
        DkCommand::SolveIntegral { input, total } => {
            let (_, _, d) = dk_datum(input, field)?;
            let d = match d {
                Ok(d) => d,
                Err(r) => return Ok(emit(&r, fmt, false)),
            };
            let sol = dk::solve_integral(&d, *total);
            let mut r = sol.report.clone();
            let found = match &sol.integral {
                Some(g) => {
                    r.set_meta("gamma", gamma_text(&g.gamma, d.coalgebra.coalgebra.basis(), d.algebra.algebra.basis()));
                    *total || sol.solution_dim > 0
                }
                None => false,
            };
            Ok(emit(&r, fmt, found && r.passed()))
        }
        DkCommand::Lambda { input, module } => {
            let (w, n, d) = dk_datum(input, field)?;
            let d = match d {
                Ok(d) => d,
                Err(r) => return Ok(emit(&r, fmt, false)),
            };
            let m = match w.get(module) {
                Some(Structure::DkModule { datum, value }) if datum == &n => value.clone(),
                Some(_) => {
                    return Err(Error::Format {
                        location: module.clone(),
                        message: format!("is not a dk_module over `{n}`"),
                    })
                }
                None => return Err(Error::UnknownReference(module.clone())),
            };
            let mut r = prefixed(dk::check_dk_module(&d, &m), module);
            if !r.passed() {
                return Ok(emit(&r, fmt, false));
            }
            let sol = dk::solve_integral(&d, true);
            r.absorb(sol.report);
            let Some(g) = sol.integral else {
                return Ok(emit(&r, fmt, false));
            };
            let lambda = dk::splitting_lambda(&d, &m, &g.gamma);
            r.absorb(dk::check_splitting(&d, &m, &lambda));
            let rows: Vec<String> = matrix_rows(&lambda).iter().map(|row| format!("[{}]", row.join(", "))).collect();
            r.set_meta("lambda", rows.join(" "));
            Ok(emit(&r, fmt, r.passed()))
        }
        DkCommand::Smash(input) => {
            let (_, _, d) = dk_datum(input, field)?;
            let d = match d {
                Ok(d) => d,
                Err(r) => return Ok(emit(&r, fmt, false)),
            };
            let mut r = dk::check_smash_koppinen(&d);
            r.set_meta("dim", d.a_dim() * d.c_dim());
            Ok(emit(&r, fmt, r.passed()))
        }
    }
}

fn yd_datum(input: &YdInput, field: Option<Field>) -> Result<(Workspace, String, std::result::Result<YdDatum, Report>)> {
    let w = load(&input.ha, field)?;
    let (n, _) = w.select(input.name.as_deref(), &["yd_datum"])?;
    let n = n.to_string();
    let d = w.yd_datum(&n)?.clone();
    let r = d.check();
    let d = if r.passed() { Ok(d) } else { Err(prefixed(r, &n)) };
    Ok((w, n, d))
}

fn yd_command(c: &YdCommand, field: Option<Field>, fmt: Format) -> Result<(i32, String)> {
    let input = match c {
        YdCommand::Verify(i) | YdCommand::Verma(i) | YdCommand::Coinvariants(i) | YdCommand::GaloisCheck(i) => i,
        YdCommand::SolveQuantumIntegral { input, .. } | YdCommand::Affineness { input, .. } => input,
    };
    let (w, n, d) = yd_datum(input, field)?;
    let d = match d {
        Ok(d) => d,
        Err(r) => return Ok(emit(&r, fmt, false)),
    };
    let yd_modules = || {
        w.items.iter().filter_map(|(mn, s)| match s {
            Structure::YdModule { datum, value } if datum == &n => Some((mn.clone(), value.clone())),
            _ => None,
        })
    };
    match c {
        YdCommand::Verify(_) => {
            let mut r = prefixed(d.check(), &n);
            for (mn, m) in yd_modules() {
                r.absorb(prefixed(yd::check_yd_module(&d, &m), &mn));
            }
            Ok(emit(&r, fmt, r.passed()))
        }
        YdCommand::Verma(_) => {
            let v = yd::verma(&d);
            let mut r = yd::check_yd_module(&d, &v);
            r.set_meta("dim", v.dim());
            Ok(emit(&r, fmt, r.passed()))
        }
        YdCommand::SolveQuantumIntegral { total, .. } => {
            let sol = yd::solve_quantum_integral(&d, *total)?;
            let mut r = sol.report.clone();
            let found = match &sol.integral {
                Some(g) => {
                    let hb = d.hopf.basis();
                    r.set_meta("gamma", gamma_text(&g.gamma, hb, d.algebra.algebra.basis()));
                    *total || sol.solution_dim > 0
                }
                None => false,
            };
            Ok(emit(&r, fmt, found && r.passed()))
        }
        YdCommand::Coinvariants(_) => {
            let b = yd::coinvariants(&d)?;
            let mut r = check_algebra(&b.algebra);
            r.set_meta("dim_b", b.dim());
            let cols: Vec<String> = b
                .inclusion
                .columns()
                .iter()
                .map(|col| format!("[{}]", col.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
                .collect();
            r.set_meta("basis", cols.join(" "));
            Ok(emit(&r, fmt, r.passed()))
        }
        YdCommand::GaloisCheck(_) => {
            let r = yd::is_quantum_galois(&d)?;
            let mut out = r.render(fmt);
            if let Some(f) = r.first_failure() {
                if matches!(fmt, Format::Table) && !f.detail.is_empty() {
                    out = format!("{}\n{out}", f.detail);
                }
            }
            Ok((if r.passed() { 0 } else { 1 }, out))
        }
        YdCommand::Affineness { witnesses, .. } => {
            let sol = yd::solve_quantum_integral(&d, true)?;
            let gamma = match &sol.integral {
                Some(g) => g.gamma.clone(),
                None => Tensor::zeros(d.field(), &[d.h_dim(), d.h_dim(), d.a_dim()]),
            };
            let b = yd::coinvariants(&d)?;
            let (yw, bw) = match witnesses {
                Some(path) => {
                    let mut w2 = w.clone();
                    w2.push("B", Structure::Algebra(b.algebra.clone()));
                    let before = w2.items.len();
                    w2.extend(&read_input(path)?)?;
                    let mut yw = Vec::new();
                    let mut bw = Vec::new();
                    for (mn, s) in &w2.items[before..] {
                        match s {
                            Structure::YdModule { datum, value } if datum == &n => yw.push((mn.clone(), value.clone())),
                            Structure::Module { over, value } if over == "B" => bw.push((mn.clone(), value.clone())),
                            _ => {}
                        }
                    }
                    (yw, bw)
                }
                None => {
                    let mut yw: Vec<_> = yd_modules().collect();
                    if yw.is_empty() {
                        yw.push(("verma".to_string(), yd::verma(&d)));
                    }
                    let bw = vec![
                        ("B".to_string(), RightModule::regular(&b.algebra)),
                        ("B2".to_string(), RightModule::free(&b.algebra, 2)),
                    ];
                    (yw, bw)
                }
            };
            let r = yd::affineness_check(&d, &gamma, &yw, &bw)?;
            Ok(emit(&r, fmt, r.passed()))
        }
    }
}
