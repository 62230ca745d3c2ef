use std::fmt::Write as _;

use angk0::classification::{CheckRegistry, CorrespondenceOptions};
use angk0::tensor::{ring, verify_tensor_correspondence};
use angk0::validation::Violation;
use clap::ArgMatches;
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use super::classify::max_order_arg;
use super::{describe_group, fmt_vec, load, path, path_arg, Command, Outcome};
use crate::error::{CliError, Exit};
use crate::report;

pub struct Ring;

impl Command for Ring {
    fn name(&self) -> &'static str {
        "ring"
    }

    fn about(&self) -> &'static str {
        "Ring structure of K0, its ideals and the tensor ideal correspondence"
    }

    fn configure(&self, cmd: clap::Command) -> clap::Command {
        cmd.arg(path_arg("path", "Presentation file with a tensor block")).arg(max_order_arg())
    }

    fn run(&self, args: &ArgMatches) -> Result<Outcome, CliError> {
        let (file, p) = load(path(args, "path"))?;
        let Some(t) = file.tensor(&p)? else {
            return Err(CliError::validation(
                "ring",
                vec![Violation::new("tensor-block", "the file has no tensor block")],
            ));
        };
        let max_order = *args.get_one::<u64>("max-order").expect("has default");
        let r = ring(&t)?;
        let opts = CorrespondenceOptions {
            max_order: Some(BigInt::from(max_order)),
            allow_even: false,
        };
        let rep = verify_tensor_correspondence(&r, &CheckRegistry::standard(), &opts)?;
        let g = r.k0().group();

        let mut text = String::new();
        let _ = writeln!(text, "K0 = {} (order {})", describe_group(g), rep.ring_order);
        let unit = r.unit_class();
        let _ = writeln!(text, "unit class {}", fmt_vec(unit.representative()));
        let _ = writeln!(text, "products of indecomposable classes:");
        let mut constants = Vec::new();
        for i in 0..p.rank() {
            for j in i..p.rank() {
                let prod = r.mul(&g.basis_class(i), &g.basis_class(j))?;
                let (a, b) = (&p.names()[i], &p.names()[j]);
                let _ = writeln!(text, "  [{a}][{b}] = {}", fmt_vec(prod.representative()));
                constants.push(json!({"left": a, "right": b, "product": report::big_vec(prod.representative())}));
            }
        }
        let _ = writeln!(text, "{} ideals", rep.entries.len());
        let mut ideals = Vec::new();
        for (i, e) in rep.entries.iter().enumerate() {
            let _ = writeln!(
                text,
                "#{i}: order {}, prime {}, tensor closed {}, round trip {}, {}",
                e.order,
                e.ideal.prime,
                e.tensor_closed,
                e.round_trip,
                e.status.label()
            );
            let mut certs = Map::new();
            for (name, c) in &e.certificates {
                certs.insert(name.to_string(), report::certificate(&p, c));
            }
            ideals.push(json!({
                "index": i,
                "order": report::big(&e.order),
                "lattice_basis": report::lattice(e.subcategory.lattice()),
                "prime": e.ideal.prime,
                "object_prime": e.object_prime,
                "tensor_closed": e.tensor_closed,
                "certificates": Value::Object(certs),
                "round_trip": e.round_trip,
                "status": e.status.label(),
            }));
        }
        if !rep.excluded.is_empty() {
            let _ = writeln!(text, "{} subgroups are not ideals", rep.excluded.len());
        }
        let _ = writeln!(
            text,
            "note: primality uses the definition verbatim, so the full ring counts as prime ({})",
            rep.full_ideal_prime
        );
        let all = rep.all_verified();
        let _ = writeln!(text, "{}", if all { "all verified" } else { "verification FAILED" });

        Ok(Outcome {
            exit: if all { Exit::Ok } else { Exit::Validation },
            digest: file.digest(),
            results: json!({
                "ring_order": report::big(&rep.ring_order),
                "invariant_factors": report::big_vec(g.invariant_factors()),
                "unit_class": report::big_vec(unit.representative()),
                "structure_constants": constants,
                "ideal_count": rep.entries.len(),
                "ideals": ideals,
                "non_ideal_subgroups": rep.excluded.iter().map(|h| report::lattice(h.preimage())).collect::<Vec<_>>(),
                "full_ideal_prime": rep.full_ideal_prime,
                "all_verified": all,
            }),
            text,
        })
    }
}
