use std::fmt::Write as _;

use angk0::tensor::validate_tensor;
use angk0::validation::{Parity, Violation};
use clap::ArgMatches;
use serde_json::{json, Value};

use super::{path, path_arg, Command, Outcome};
use crate::error::{CliError, Exit};
use crate::format;
use crate::report;

pub struct Validate;

impl Command for Validate {
    fn name(&self) -> &'static str {
        "validate"
    }

    fn about(&self) -> &'static str {
        "Check a presentation file (and its tensor block, if any)"
    }

    fn configure(&self, cmd: clap::Command) -> clap::Command {
        cmd.arg(path_arg("path", "Presentation file"))
    }

    fn run(&self, args: &ArgMatches) -> Result<Outcome, CliError> {
        let file = format::load(path(args, "path"))?;
        let violations = file.presentation_violations();
        let parity = Parity::of(file.n);

        let tensor: Option<Vec<Violation>> = match &file.tensor {
            None => None,
            Some(_) if !violations.is_empty() => Some(Vec::new()),
            Some(_) => {
                let p = file.presentation()?;
                Some(match file.tensor(&p) {
                    Ok(t) => validate_tensor(&t.expect("block present")).violations,
                    Err(CliError::Validation { violations, .. }) => violations,
                    Err(e) => return Err(e),
                })
            }
        };
        let valid = violations.is_empty() && tensor.as_ref().is_none_or(|v| v.is_empty());

        let mut text = String::new();
        let _ = writeln!(text, "{}", if valid { "valid" } else { "invalid" });
        let _ = writeln!(text, "n = {} ({})", file.n, parity.as_str());
        if parity == Parity::Even {
            let _ = writeln!(text, "note: the classifications only apply for odd n");
        }
        for v in &violations {
            let _ = writeln!(text, "  {v}");
        }
        if let Some(tv) = &tensor {
            let _ = writeln!(text, "tensor: {}", if tv.is_empty() { "valid" } else { "invalid" });
            for v in tv {
                let _ = writeln!(text, "  {v}");
            }
        }

        let tensor_json = match &tensor {
            None => Value::Null,
            Some(tv) => json!({"valid": tv.is_empty(), "violations": report::violations(tv)}),
        };
        Ok(Outcome {
            exit: if valid { Exit::Ok } else { Exit::Validation },
            digest: file.digest(),
            results: json!({
                "valid": valid,
                "parity": parity.as_str(),
                "classification_applies": parity == Parity::Odd,
                "violations": report::violations(&violations),
                "tensor": tensor_json,
            }),
            text,
        })
    }
}
