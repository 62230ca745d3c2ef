use std::fmt::Write as _;

use angk0::classification::{verify_correspondence, CheckRegistry, CorrespondenceOptions, EntryStatus};
use angk0::grothendieck::k0;
use clap::{Arg, ArgMatches};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use super::{describe_group, fmt_vec, load, path, path_arg, Command, Outcome};
use crate::error::{CliError, Exit};
use crate::report;

pub struct Classify;

pub(crate) fn max_order_arg() -> Arg {
    Arg::new("max-order")
        .long("max-order")
        .value_parser(clap::value_parser!(u64))
        .default_value("256")
        .help("Refuse groups of larger order")
}

impl Command for Classify {
    fn name(&self) -> &'static str {
        "classify"
    }

    fn about(&self) -> &'static str {
        "Match subgroups of K0 with dense complete subcategories (odd n)"
    }

    fn configure(&self, cmd: clap::Command) -> clap::Command {
        cmd.arg(path_arg("path", "Presentation file")).arg(max_order_arg())
    }

    fn run(&self, args: &ArgMatches) -> Result<Outcome, CliError> {
        let (file, p) = load(path(args, "path"))?;
        let max_order = *args.get_one::<u64>("max-order").expect("has default");
        let k = k0(&p);
        let opts = CorrespondenceOptions {
            max_order: Some(BigInt::from(max_order)),
            allow_even: false,
        };
        let rep = verify_correspondence(&k, &CheckRegistry::standard(), &opts)?;
        let g = k.group();

        let mut text = String::new();
        let _ = writeln!(text, "K0 = {} (order {})", describe_group(g), rep.group_order);
        let _ = writeln!(text, "{} subgroups", rep.entries.len());
        let mut entries = Vec::new();
        for (i, e) in rep.entries.iter().enumerate() {
            let basis = e.subcategory.lattice().basis_rows();
            let _ = writeln!(
                text,
                "#{i}: order {}, lattice {}, {}",
                e.order,
                basis.iter().map(|r| fmt_vec(r)).collect::<Vec<_>>().join(" "),
                e.status.label()
            );
            let mut certs = Map::new();
            for (name, c) in &e.certificates {
                let _ = writeln!(text, "    {name}: {c}");
                certs.insert(name.to_string(), report::certificate(&p, c));
            }
            let _ = writeln!(text, "    round trip: {}", e.round_trip);
            let gens: Vec<Value> = e
                .generators
                .iter()
                .map(|gr| {
                    json!({
                        "element": report::big_vec(gr.element.representative()),
                        "realization": report::element_object(&p, &gr.object),
                        "realized": gr.realized,
                    })
                })
                .collect();
            entries.push(json!({
                "index": i,
                "order": report::big(&e.order),
                "generators": gens,
                "lattice_basis": report::lattice(e.subcategory.lattice()),
                "certificates": Value::Object(certs),
                "round_trip": e.round_trip,
                "membership_matches": e.membership_matches,
                "status": e.status.label(),
            }));
        }
        let all = rep.all_verified();
        let _ = writeln!(text, "distinct lattices: {}, order preserving: {}", rep.distinct_lattices, rep.monotone);
        let _ = writeln!(text, "{}", if all { "all verified" } else { "verification FAILED" });

        Ok(Outcome {
            exit: if all { Exit::Ok } else { Exit::Validation },
            digest: file.digest(),
            results: json!({
                "group_order": report::big(&rep.group_order),
                "invariant_factors": report::big_vec(g.invariant_factors()),
                "subgroup_count": rep.entries.len(),
                "subgroups": entries,
                "distinct_lattices": rep.distinct_lattices,
                "monotone": rep.monotone,
                "failed": rep.entries.iter().filter(|e| e.status == EntryStatus::Failed).count(),
                "all_verified": all,
            }),
            text,
        })
    }
}
