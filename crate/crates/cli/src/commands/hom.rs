use std::collections::BTreeMap;
use std::fmt::Write as _;

use angk0::cluster::{check_surjective, induced_hom};
use clap::ArgMatches;
use serde_json::json;

use super::{describe_group, fmt_vec, path, path_arg, Command, Outcome};
use crate::error::{CliError, Exit};
use crate::format::{self, hex_digest};
use crate::report;

pub struct Hom;

const DIAGNOSTIC: &str = "not surjective: the input is not a cluster-tilting instance or its angle list is incomplete";

impl Command for Hom {
    fn name(&self) -> &'static str {
        "hom"
    }

    fn about(&self) -> &'static str {
        "Induced map K0(C) → K0(T) for a subcategory closed under the (n-2)-fold suspension"
    }

    fn configure(&self, cmd: clap::Command) -> clap::Command {
        cmd.arg(path_arg("t", "Triangulated category T (n = 3)"))
            .arg(path_arg("c", "Subcategory C"))
            .arg(path_arg("map", "JSON object mapping C names to T names"))
    }

    fn run(&self, args: &ArgMatches) -> Result<Outcome, CliError> {
        let t = format::load(path(args, "t"))?;
        let c = format::load(path(args, "c"))?;
        let map_path = path(args, "map");
        let map: BTreeMap<String, String> = format::parse_json(map_path, &format::read_text(map_path)?)?;
        let e = format::embedding(&t, &c, &map)?;
        let hom = induced_hom(&e)?;
        let surjective = check_surjective(&hom);

        let mut text = String::new();
        let _ = writeln!(
            text,
            "K0(C) = {} → K0(T) = {}",
            describe_group(hom.source()),
            describe_group(hom.target())
        );
        let _ = writeln!(text, "well defined: true");
        let _ = writeln!(text, "matrix (columns are images of C indecomposables):");
        for row in hom.matrix().row_vecs() {
            let _ = writeln!(text, "  {}", fmt_vec(&row));
        }
        let _ = writeln!(text, "surjective: {surjective}");
        if !surjective {
            let _ = writeln!(text, "{DIAGNOSTIC}");
        }

        let digest_input = format!(
            "{}\n{}\n{}",
            t.canonical_json(),
            c.canonical_json(),
            serde_json::to_string(&map).expect("string map")
        );
        Ok(Outcome {
            exit: Exit::Ok,
            digest: hex_digest(digest_input.as_bytes()),
            results: json!({
                "well_defined": true,
                "source_invariant_factors": report::big_vec(hom.source().invariant_factors()),
                "source_free_rank": hom.source().free_rank(),
                "target_invariant_factors": report::big_vec(hom.target().invariant_factors()),
                "target_free_rank": hom.target().free_rank(),
                "matrix": report::matrix(hom.matrix()),
                "surjective": surjective,
                "diagnostic": if surjective { serde_json::Value::Null } else { DIAGNOSTIC.into() },
            }),
            text,
        })
    }
}
