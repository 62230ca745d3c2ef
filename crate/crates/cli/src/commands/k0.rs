use std::fmt::Write as _;

use angk0::category::ObjectVec;
use angk0::grothendieck::k0;
use clap::ArgMatches;
use serde_json::{json, Map, Value};

use super::{describe_group, fmt_vec, load, path, path_arg, Command, Outcome};
use crate::error::{CliError, Exit};
use crate::report;

pub struct K0;

impl Command for K0 {
    fn name(&self) -> &'static str {
        "k0"
    }

    fn about(&self) -> &'static str {
        "Compute the Grothendieck group"
    }

    fn configure(&self, cmd: clap::Command) -> clap::Command {
        cmd.arg(path_arg("path", "Presentation file"))
    }

    fn run(&self, args: &ArgMatches) -> Result<Outcome, CliError> {
        let (file, p) = load(path(args, "path"))?;
        let k = k0(&p);
        let g = k.group();

        let mut classes = Map::new();
        let mut text = String::new();
        let _ = writeln!(text, "K0 = {}", describe_group(g));
        let _ = writeln!(
            text,
            "invariant factors {}, free rank {}, order {}",
            fmt_vec(g.invariant_factors()),
            g.free_rank(),
            g.order().map_or("infinite".to_string(), |o| o.to_string())
        );
        let _ = writeln!(text, "relation lattice basis:");
        for row in k.relation_lattice().basis_rows() {
            let _ = writeln!(text, "  {}", fmt_vec(&row));
        }
        let _ = writeln!(text, "classes (canonical representatives):");
        for (j, name) in p.names().iter().enumerate() {
            let c = k.class_of(&ObjectVec::basis(p.rank(), j))?;
            let _ = writeln!(text, "  [{name}] = {}", fmt_vec(c.representative()));
            classes.insert(name.clone(), report::big_vec(c.representative()));
        }

        Ok(Outcome {
            exit: Exit::Ok,
            digest: file.digest(),
            results: json!({
                "rank": p.rank(),
                "invariant_factors": report::big_vec(g.invariant_factors()),
                "free_rank": g.free_rank(),
                "order": g.order().as_ref().map_or(Value::Null, report::big),
                "relation_basis": report::lattice(k.relation_lattice()),
                "classes": Value::Object(classes),
            }),
            text,
        })
    }
}
