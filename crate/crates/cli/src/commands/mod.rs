//! Subcommands, registered by name.

use std::io::Write;
use std::path::{Path, PathBuf};

use angk0::category::Presentation;
use clap::{Arg, ArgAction, ArgMatches};
use serde_json::{json, Value};

use crate::error::{CliError, Exit};
use crate::format::{self, PresentationFile};
use crate::report::{self, ReportDocument};

mod classify;
mod hom;
mod k0;
mod ring;
mod validate;
mod witness;

pub use classify::Classify;
pub use hom::Hom;
pub use k0::K0;
pub use ring::Ring;
pub use validate::Validate;
pub use witness::Witness;

/// What a command produced. `exit` is non-zero when a verdict was delivered
/// but the input failed it (for example a validation report with violations).
pub struct Outcome {
    pub exit: Exit,
    pub digest: String,
    pub results: Value,
    pub text: String,
}

pub trait Command: Send + Sync {
    fn name(&self) -> &'static str;
    fn about(&self) -> &'static str;
    /// Adds the command's own arguments.
    fn configure(&self, cmd: clap::Command) -> clap::Command;
    fn run(&self, args: &ArgMatches) -> Result<Outcome, CliError>;
}

pub struct Registry {
    commands: Vec<Box<dyn Command>>,
}

impl Registry {
    pub fn empty() -> Self {
        Registry { commands: Vec::new() }
    }

    pub fn standard() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(Validate));
        r.register(Box::new(K0));
        r.register(Box::new(Classify));
        r.register(Box::new(Ring));
        r.register(Box::new(Hom));
        r.register(Box::new(Witness));
        r
    }

    pub fn register(&mut self, c: Box<dyn Command>) {
        self.commands.retain(|x| x.name() != c.name());
        self.commands.push(c);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Command> {
        self.commands.iter().find(|c| c.name() == name).map(|c| c.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.commands.iter().map(|c| c.name()).collect()
    }

    pub fn clap(&self) -> clap::Command {
        let mut root = clap::Command::new("angk0")
            .about("Grothendieck groups of finitely presented n-angulated categories")
            .version(env!("CARGO_PKG_VERSION"))
            .subcommand_required(true)
            .arg_required_else_help(true)
            .arg(
                Arg::new("json")
                    .long("json")
                    .global(true)
                    .action(ArgAction::SetTrue)
                    .overrides_with("text")
                    .help("Emit the JSON report document"),
            )
            .arg(
                Arg::new("text")
                    .long("text")
                    .global(true)
                    .action(ArgAction::SetTrue)
                    .overrides_with("json")
                    .help("Emit human-readable text (default)"),
            );
        for c in &self.commands {
            root = root.subcommand(c.configure(clap::Command::new(c.name()).about(c.about())));
        }
        root
    }

    /// Parses `args`, runs the command and writes its output. Returns the
    /// process exit code.
    pub fn run<I, T>(&self, args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let matches = match self.clap().try_get_matches_from(args) {
            Ok(m) => m,
            Err(e) => {
                use clap::error::ErrorKind;
                let code = match e.kind() {
                    ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Exit::Ok,
                    _ => Exit::Input,
                };
                let rendered = e.render().to_string();
                let _ = if code == Exit::Ok {
                    write!(out, "{rendered}")
                } else {
                    write!(err, "{rendered}")
                };
                return code.code();
            }
        };
        let (name, sub) = matches.subcommand().expect("subcommand required");
        let json = sub.get_flag("json");
        let command = self.get(name).expect("registered subcommand");
        match command.run(sub) {
            Ok(o) => {
                let _ = if json {
                    write!(out, "{}", ReportDocument::new(name, o.digest, o.results).to_json())
                } else {
                    write!(out, "{}", o.text)
                };
                o.exit.code()
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                if json {
                    let mut detail = json!({"kind": e.kind(), "message": e.to_string()});
                    if let CliError::Validation { violations, .. } = &e {
                        detail["violations"] = report::violations(violations);
                    }
                    let doc = ReportDocument::new(name, String::new(), json!({ "error": detail }));
                    let _ = write!(out, "{}", doc.to_json());
                }
                e.exit().code()
            }
        }
    }
}

impl Default for Registry {
    fn default() -> Self {
        Self::standard()
    }
}

pub(crate) fn path_arg(name: &'static str, help: &'static str) -> Arg {
    Arg::new(name)
        .required(true)
        .value_parser(clap::value_parser!(PathBuf))
        .help(help)
}

pub(crate) fn path<'a>(args: &'a ArgMatches, name: &str) -> &'a Path {
    args.get_one::<PathBuf>(name).expect("required argument")
}

/// Loads and validates a presentation file.
pub(crate) fn load(path: &Path) -> Result<(PresentationFile, Presentation), CliError> {
    let file = format::load(path)?;
    let p = file.presentation()?;
    Ok((file, p))
}

/// `Z/2 ⊕ Z/2`, `Z^2`, `0`.
pub(crate) fn describe_group(g: &angk0::lattice::FgAbelianGroup) -> String {
    let mut parts: Vec<String> = g.invariant_factors().iter().map(|d| format!("Z/{d}")).collect();
    match g.free_rank() {
        0 => {}
        1 => parts.push("Z".into()),
        f => parts.push(format!("Z^{f}")),
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ⊕ ")
    }
}

pub(crate) fn fmt_vec(v: &[num_bigint::BigInt]) -> String {
    format!("[{}]", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

/// `2a + b`, or `0`.
pub(crate) fn fmt_object(p: &Presentation, v: &angk0::category::ObjectVec) -> String {
    let terms: Vec<String> = v
        .multiplicities()
        .iter()
        .enumerate()
        .filter(|(_, &m)| m > 0)
        .map(|(i, &m)| {
            if m == 1 {
                p.names()[i].clone()
            } else {
                format!("{m}{}", p.names()[i])
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
