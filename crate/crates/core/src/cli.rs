//! Structure-constant files and the `lie-tensor` command line.
//!
//! An algebra file is UTF-8 JSON:
//!
//! ```json
//! {
//!   "format": 1,
//!   "name": "H(1)",
//!   "dim": 3,
//!   "brackets": [
//!     { "i": 1, "j": 2, "terms": [ { "k": 3, "c": "1" } ] }
//!   ]
//! }
//! ```
//!
//! Indices are 1-based with `i < j`; each coefficient `c` is an exact
//! rational written `"p"` or `"p/q"`.
//!
//! Exit codes: 0 success, 1 bad input or usage, 2 a mathematical
//! cross-check failed.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::liealg::{LieAlgebra, StructureConstant};
use crate::linalg::Scalar;
use crate::verify::{self, default_catalog, run_catalog, CatalogResult, InvariantReport};

pub const FORMAT_VERSION: u32 = 1;

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub k: usize,
    pub c: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub format: u32,
    pub name: String,
    pub dim: usize,
    pub brackets: Vec<BracketEntry>,
}

impl AlgebraFile {
    /// Canonical file for an algebra: brackets in lexicographic `(i, j)`
    /// order, terms by increasing `k`, zero coefficients omitted.
    pub fn from_algebra(l: &LieAlgebra) -> Self {
        let mut brackets: Vec<BracketEntry> = Vec::new();
        for StructureConstant { i, j, k, coeff } in l.structure_constants() {
            match brackets.last_mut() {
                Some(b) if b.i == i && b.j == j => b.terms.push(Term { k, c: coeff }),
                _ => brackets.push(BracketEntry {
                    i,
                    j,
                    terms: vec![Term { k, c: coeff }],
                }),
            }
        }
        AlgebraFile {
            format: FORMAT_VERSION,
            name: l.name().to_string(),
            dim: l.dim(),
            brackets,
        }
    }

    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        if self.format != FORMAT_VERSION {
            return Err(Error::InvalidArgument(format!(
                "unsupported format {}, expected {FORMAT_VERSION}",
                self.format
            )));
        }
        let constants = self.brackets.iter().flat_map(|b| {
            b.terms
                .iter()
                .map(move |t| StructureConstant::new(b.i, b.j, t.k, t.c.clone()))
        });
        LieAlgebra::from_structure_constants(self.name.clone(), self.dim, constants)
    }

    /// Pretty-printed JSON with a trailing newline; byte-stable.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

/// Parses and validates an algebra from file contents.
pub fn parse_algebra_str(text: &str) -> Result<LieAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.to_algebra()
}

pub fn parse_algebra_file(path: impl AsRef<Path>) -> Result<LieAlgebra> {
    let path = path.as_ref();
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_algebra_str(&text)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Machine,
}

#[derive(Debug, Parser)]
#[command(
    name = "lie-tensor",
    version,
    about = "Tensor squares, exterior squares and Schur multipliers of nilpotent Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute every invariant of the algebra in FILE.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Check the built-in catalog.
    Catalog {
        /// Only check the entry with this name.
        #[arg(long)]
        only: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Write the algebra file for a named algebra, e.g. "H(2)" or "H(1)+A(2)".
    Builtin {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn exit_code(e: &Error) -> i32 {
    if e.is_inconsistency() {
        2
    } else {
        1
    }
}

/// Runs the command line with explicit output streams and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version go to stdout with status 0.
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 1;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    let result = match cli.command {
        Command::Analyze { file, format } => cmd_analyze(&file, format, out),
        Command::Catalog { only, format } => cmd_catalog(only.as_deref(), format, out),
        Command::Builtin { name, out: path } => cmd_builtin(&name, path.as_deref(), out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

pub fn render_report_text(name: &str, r: &InvariantReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "algebra               {name}");
    let rows: [(&str, String); 14] = [
        ("n", r.n.to_string()),
        ("m", r.m.to_string()),
        ("dim_center", r.dim_center.to_string()),
        ("nilpotency_class", r.nilpotency_class.to_string()),
        ("dim_multiplier", r.dim_multiplier.to_string()),
        ("t_value", r.t_value.to_string()),
        ("dim_tensor_square", r.dim_tensor_square.to_string()),
        ("dim_exterior_square", r.dim_exterior_square.to_string()),
        ("dim_square_submodule", r.dim_square_submodule.to_string()),
        ("bound_value", r.bound_value.to_string()),
        ("rocco_value", r.rocco_value.to_string()),
        (
            "bound_satisfied",
            if r.m == 0 {
                format!("{} (abelian: bound does not apply)", r.bound_satisfied)
            } else {
                r.bound_satisfied.to_string()
            },
        ),
        ("equality_case", r.equality_case.to_string()),
        ("classification", r.classification.clone()),
    ];
    for (k, v) in rows {
        let _ = writeln!(s, "{k:<22}{v}");
    }
    s
}

pub fn render_report_machine(r: &InvariantReport) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("report serializes");
    s.push('\n');
    s
}

pub fn cmd_analyze(path: &Path, format: OutputFormat, out: &mut dyn Write) -> Result<i32> {
    let l = parse_algebra_file(path)?;
    if !l.is_nilpotent() {
        return Err(Error::NotNilpotent(format!(
            "{}: its lower central series stabilizes at a nonzero ideal",
            l.name()
        )));
    }
    let report = verify::analyze(&l)?;
    let text = match format {
        OutputFormat::Text => render_report_text(l.name(), &report),
        OutputFormat::Machine => render_report_machine(&report),
    };
    out.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(0)
}

#[derive(Serialize)]
struct CatalogDocument<'a> {
    passed: bool,
    entries: &'a [CatalogResult],
}

pub fn render_catalog_text(results: &[CatalogResult]) -> String {
    let mut s = String::new();
    for r in results {
        let _ = writeln!(s, "{} {}", if r.passed { "PASS" } else { "FAIL" }, r.name);
        for c in r.checks.iter().filter(|c| !c.passed) {
            let _ = writeln!(s, "    {}: {}", c.check, c.detail);
        }
    }
    let ok = results.iter().filter(|r| r.passed).count();
    let _ = writeln!(s, "{ok}/{} entries passed", results.len());
    s
}

pub fn cmd_catalog(only: Option<&str>, format: OutputFormat, out: &mut dyn Write) -> Result<i32> {
    let mut entries = default_catalog();
    if let Some(name) = only {
        entries.retain(|e| e.name == name);
        if entries.is_empty() {
            let names: Vec<String> = default_catalog().into_iter().map(|e| e.name).collect();
            return Err(Error::InvalidArgument(format!(
                "no catalog entry named {name:?}; entries: {}",
                names.join(", ")
            )));
        }
    }
    let results = run_catalog(&entries);
    let passed = results.iter().all(|r| r.passed);
    let text = match format {
        OutputFormat::Text => render_catalog_text(&results),
        OutputFormat::Machine => {
            let mut s = serde_json::to_string_pretty(&CatalogDocument {
                passed,
                entries: &results,
            })
            .expect("catalog serializes");
            s.push('\n');
            s
        }
    };
    out.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(if passed { 0 } else { 2 })
}

pub fn cmd_builtin(name: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let l = verify::algebra_by_name(name).map_err(|e| {
        let mut msg = format!("{e}\nvalid names:");
        for n in verify::builtin_names() {
            msg.push_str("\n  ");
            msg.push_str(n);
        }
        Error::InvalidArgument(msg)
    })?;
    let json = AlgebraFile::from_algebra(&l).to_json();
    match path {
        Some(p) => {
            std::fs::write(p, json).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?
        }
        None => out.write_all(json.as_bytes()).map_err(io_err)?,
    }
    Ok(0)
}
