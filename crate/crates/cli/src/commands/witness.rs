use std::fmt::Write as _;
use std::path::Path;

use angk0::grothendieck::k0;
use angk0::witness::{witness_search, WitnessOutcome};
use clap::{Arg, ArgMatches};
use serde_json::{json, Value};

use super::{fmt_object, load, path, path_arg, Command, Outcome};
use crate::error::{CliError, Exit};
use crate::format::{self, ObjectLiteral};
use crate::report;

pub struct Witness;

const CAVEAT: &str = "no witness within the bound; this does not refute equality";

fn object_arg(name: &'static str) -> Arg {
    Arg::new(name)
        .long(name)
        .required(true)
        .value_name("OBJ")
        .help("Object literal such as '{\"a\": 2, \"b\": 1}'")
}

impl Command for Witness {
    fn name(&self) -> &'static str {
        "witness"
    }

    fn about(&self) -> &'static str {
        "Decide [A] = [B] and search for a pair of witnessing angles"
    }

    fn configure(&self, cmd: clap::Command) -> clap::Command {
        cmd.arg(path_arg("path", "Presentation file"))
            .arg(object_arg("left"))
            .arg(object_arg("right"))
            .arg(
                Arg::new("bound")
                    .long("bound")
                    .value_parser(clap::value_parser!(usize))
                    .default_value("2")
                    .help("Maximum number of angles summed on each side"),
            )
    }

    fn run(&self, args: &ArgMatches) -> Result<Outcome, CliError> {
        let (file, p) = load(path(args, "path"))?;
        let bound = *args.get_one::<usize>("bound").expect("has default");
        let literal = |flag: &str| -> Result<ObjectLiteral, CliError> {
            let text = args.get_one::<String>(flag).expect("required");
            format::parse_json(Path::new(&format!("--{flag}")), text)
        };
        let (left, right) = (literal("left")?, literal("right")?);
        let mut bad = Vec::new();
        let a = file.object(&left, "--left", &mut bad);
        let b = file.object(&right, "--right", &mut bad);
        if !bad.is_empty() {
            return Err(CliError::validation("invalid object", bad));
        }

        let k = k0(&p);
        let equal = k.equal_classes(&a, &b)?;
        let mut text = String::new();
        let _ = writeln!(text, "[{}] = [{}]: {equal}", fmt_object(&p, &a), fmt_object(&p, &b));

        let witness = if equal {
            let outcome = witness_search(&p, &a, &b, bound)?;
            match &outcome {
                WitnessOutcome::Found(w) => {
                    let _ = writeln!(text, "witness:");
                    for (i, c) in w.objects.iter().enumerate() {
                        let _ = writeln!(text, "  C{} = {}", i + 1, fmt_object(&p, c));
                    }
                    let show = |a: &angk0::category::AngleGen| {
                        a.vertices().iter().map(|v| fmt_object(&p, v)).collect::<Vec<_>>().join(", ")
                    };
                    let _ = writeln!(text, "  left angle  ({})", show(&w.left_angle));
                    let _ = writeln!(text, "  right angle ({})", show(&w.right_angle));
                    json!({
                        "outcome": "found",
                        "objects": w.objects.iter().map(|c| report::object(&p, c)).collect::<Vec<_>>(),
                        "left_atoms": w.left.iter().map(|x| report::atom(&p, x)).collect::<Vec<_>>(),
                        "right_atoms": w.right.iter().map(|x| report::atom(&p, x)).collect::<Vec<_>>(),
                        "left_angle": report::angle(&p, &w.left_angle),
                        "right_angle": report::angle(&p, &w.right_angle),
                    })
                }
                WitnessOutcome::NotFound { bound } => {
                    let _ = writeln!(text, "{CAVEAT} (bound {bound})");
                    json!({"outcome": "not-found", "bound": bound, "caveat": CAVEAT})
                }
            }
        } else {
            let _ = writeln!(text, "classes differ; no search performed");
            Value::Null
        };

        Ok(Outcome {
            exit: Exit::Ok,
            digest: file.digest(),
            results: json!({
                "left": report::object(&p, &a),
                "right": report::object(&p, &b),
                "equal": equal,
                "searched": equal,
                "bound": bound,
                "witness": witness,
            }),
            text,
        })
    }
}
