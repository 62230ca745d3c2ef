//! Acceptance suite: one line per criterion, non-zero exit on any failure.

use std::collections::HashMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use angk0::category::{direct_sum_angle, AngleGen, ObjectVec, Presentation};
use angk0::classification::{verify_correspondence, CheckRegistry, CorrespondenceOptions};
use angk0::cluster::{check_surjective, induced_hom};
use angk0::grothendieck::{euler_vector, k0, ElementObject};
use angk0::lattice::{enumerate_subgroups, hermite_normal_form, smith_normal_form, FgAbelianGroup, IntMatrix, Lattice};
use angk0::samples::{self, random_monoid_tensor, random_object, random_presentation, RandomShape};
use angk0::tensor::{enumerate_ideals, is_prime_ideal, ring, tensor_objects, verify_tensor_correspondence};
use angk0::witness::{atoms, check_witness, witness_search, WitnessOutcome};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn cli(args: &[&str], threads: Option<&str>) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_angk0"));
    cmd.args(args);
    if let Some(t) = threads {
        cmd.env("ANGK0_THREADS", t);
    }
    let out = cmd.output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8"))
}

fn cli_json(args: &[&str]) -> Result<(i32, Value), String> {
    let (code, out) = cli(args, None);
    let v: Value = serde_json::from_str(&out).map_err(|e| format!("bad JSON from {args:?}: {e}"))?;
    Ok((code, v))
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let t = start.elapsed();
    ensure!(t < limit, "took {t:?}, limit {limit:?}");
    Ok(format!("{:.2?}", t))
}

/// Smith invariants by elementary row and column reduction (i128).
#[allow(clippy::needless_range_loop, clippy::while_let_loop)]
fn snf_oracle(mut a: Vec<Vec<i128>>, cols: usize) -> Vec<i128> {
    let rows = a.len();
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let Some((pr, pc)) = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs())
            else {
                break;
            };
            a.swap(t, pr);
            for row in a.iter_mut() {
                row.swap(t, pc);
            }
            let p = a[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                for j in 0..cols {
                    a[i][j] -= q * a[t][j];
                }
                dirty |= a[i][t] != 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                for row in a.iter_mut() {
                    row[j] -= q * row[t];
                }
                dirty |= a[t][j] != 0;
            }
            if dirty {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in 0..cols {
                        a[t][j] += a[i][j];
                    }
                }
                None => break,
            }
        }
        if t < rows && t < cols {
            diag.push(a[t][t].abs());
        }
    }
    diag.resize(rows.min(cols), 0);
    diag
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let (code, v) = cli_json(&["k0", "--json", data("g1.json").to_str().unwrap()])?;
    ensure!(code == 0, "exit {code}");
    ensure!(v["results"]["invariant_factors"] == serde_json::json!([2, 2]), "factors {}", v["results"]["invariant_factors"]);
    ensure!(v["results"]["free_rank"] == 0, "free rank {}", v["results"]["free_rank"]);
    let time = within(start, Duration::from_secs(1))?;

    // relation rows written out by hand: Euler vector of (a, b, c), then 2e_j
    let rel = vec![vec![1, -1, 1], vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]];
    let oracle: Vec<i128> = snf_oracle(rel, 3).into_iter().filter(|&d| d != 1).collect();
    ensure!(oracle == vec![2, 2], "oracle invariants {oracle:?}");

    let k = k0(&samples::g1());
    let mut classes = std::collections::BTreeSet::new();
    for x in 0..2u64 {
        for y in 0..2u64 {
            for z in 0..2u64 {
                classes.insert(k.class_of(&ObjectVec::new(vec![x, y, z])).unwrap());
            }
        }
    }
    ensure!(classes.len() == 4, "{} cosets", classes.len());
    Ok(format!("factors [2, 2], free rank 0, 4 cosets ({time})"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let (code, v) = cli_json(&["classify", "--json", data("g1.json").to_str().unwrap()])?;
    ensure!(code == 0, "exit {code}");
    let subs = v["results"]["subgroups"].as_array().ok_or("no subgroups")?;
    ensure!(subs.len() == 5, "{} subgroups", subs.len());
    for s in subs {
        ensure!(s["certificates"]["dense"]["verdict"] == "holds", "dense: {}", s["certificates"]["dense"]);
        ensure!(s["certificates"]["complete"]["verdict"] == "holds", "complete: {}", s["certificates"]["complete"]);
        ensure!(s["round_trip"] == true, "round trip failed");
    }
    let bases: std::collections::BTreeSet<String> = subs.iter().map(|s| s["lattice_basis"].to_string()).collect();
    ensure!(bases.len() == 5, "{} distinct lattices", bases.len());
    let time = within(start, Duration::from_secs(1))?;

    // exact lattice equality through the library as well
    let k = k0(&samples::g1());
    let rep = verify_correspondence(&k, &CheckRegistry::standard(), &CorrespondenceOptions::default()).map_err(|e| e.to_string())?;
    ensure!(rep.all_verified() && rep.distinct_lattices, "library report not verified");
    Ok(format!("5 subgroups, dense and complete, 5 distinct lattices ({time})"))
}

fn criterion_3() -> Outcome {
    let (code, v) = cli_json(&["classify", "--json", data("g2.json").to_str().unwrap()])?;
    ensure!(code == 0, "exit {code}");
    ensure!(v["results"]["invariant_factors"] == serde_json::json!([2]), "factors {}", v["results"]["invariant_factors"]);
    let subs = v["results"]["subgroups"].as_array().ok_or("no subgroups")?;
    ensure!(subs.len() == 2, "{} subgroups", subs.len());
    ensure!(subs.iter().all(|s| s["round_trip"] == true), "round trip failed");
    Ok("K0 = Z/2, 2 subgroups, both round-trip".into())
}

fn hundred_presentations() -> Vec<Presentation> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    (0..100).map(|_| random_presentation(&mut rng, &RandomShape::default())).collect()
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut checks = 0usize;
    for p in hundred_presentations() {
        let k = k0(&p);
        let g = k.group();
        ensure!(k.class_of(&p.zero_object()).unwrap().is_zero(), "[0] ≠ 0 for {p:?}");
        for _ in 0..10 {
            let a = random_object(&mut rng, p.rank(), 3);
            let b = random_object(&mut rng, p.rank(), 3);
            let (ca, cb) = (k.class_of(&a).unwrap(), k.class_of(&b).unwrap());
            ensure!(k.class_of(&(&a + &b)).unwrap() == g.add(&ca, &cb), "additivity fails for {p:?}");
            let expected = if p.n() % 2 == 0 { ca.clone() } else { g.neg(&ca) };
            ensure!(k.class_of(&p.suspend_object(&a, 1)).unwrap() == expected, "[ΣA] ≠ (-1)^n [A] for {p:?}");
            checks += 2;
        }
        if p.is_odd() {
            for _ in 0..20 {
                let lift: Vec<BigInt> = (0..p.rank()).map(|_| BigInt::from(rng.gen_range(-6..=6))).collect();
                let x = g.class_of(&lift).unwrap();
                let obj = k.object_for_element(&x).unwrap();
                ensure!(matches!(obj, ElementObject::Single(_)), "odd n gave a pair");
                ensure!(k.class_of_realization(&obj).unwrap() == x, "realization round trip fails for {p:?}");
                checks += 1;
            }
        }
    }
    let time = within(start, Duration::from_secs(30))?;
    Ok(format!("100 presentations, {checks} checks ({time})"))
}

fn criterion_5() -> Outcome {
    let mut count = 0usize;
    for p in hundred_presentations() {
        let k = k0(&p);
        for a in p.angles() {
            for offset in 0..p.n() {
                let e = euler_vector(&p, &p.rotate_angle_by(a, offset)).unwrap();
                ensure!(k.relation_lattice().contains(e.as_slice()).unwrap(), "rotation {offset} of {a:?} escapes in {p:?}");
                count += 1;
            }
        }
    }
    Ok(format!("{count} rotated generators stay in the relation lattice"))
}

/// `(A, B)` such that `(A ⊕ C_1, C_2, ...)` and `(B ⊕ C_1, C_2, ...)` are both
/// sums of at most two atoms.
fn constructed_pair(p: &Presentation, rng: &mut ChaCha8Rng) -> Option<(ObjectVec, ObjectVec)> {
    let pool: Vec<AngleGen> = atoms(p, 2).iter().map(|a| a.realize(p).unwrap()).collect();
    let mut sums = vec![p.zero_angle()];
    for i in 0..pool.len() {
        sums.push(pool[i].clone());
        for j in i..pool.len() {
            sums.push(direct_sum_angle(&pool[i], &pool[j]).unwrap());
        }
    }
    let mut by_tail: HashMap<Vec<ObjectVec>, Vec<usize>> = HashMap::new();
    for (i, s) in sums.iter().enumerate() {
        by_tail.entry(s.vertices()[1..].to_vec()).or_default().push(i);
    }
    let mut candidates: Vec<(usize, usize)> = Vec::new();
    let mut tails: Vec<_> = by_tail.values().collect();
    tails.sort();
    for group in tails {
        for &x in group {
            for &y in group {
                if sums[x].vertices()[0] != sums[y].vertices()[0] {
                    candidates.push((x, y));
                }
            }
        }
    }
    let &(x, y) = candidates.choose(rng)?;
    let (hx, hy) = (&sums[x].vertices()[0], &sums[y].vertices()[0]);
    let m = hx.meet(hy);
    Some((hx.checked_sub(&m).unwrap(), hy.checked_sub(&m).unwrap()))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let shape = RandomShape {
        max_rank: 3,
        max_angles: 2,
        max_multiplicity: 2,
        arities: vec![3, 5],
    };
    let mut positives = 0;
    while positives < 50 {
        let p = random_presentation(&mut rng, &shape);
        let Some((a, b)) = constructed_pair(&p, &mut rng) else { continue };
        let k = k0(&p);
        ensure!(k.equal_classes(&a, &b).unwrap(), "constructed pair has unequal classes: {a:?}, {b:?} in {p:?}");
        match witness_search(&p, &a, &b, 2).unwrap() {
            WitnessOutcome::Found(w) => ensure!(check_witness(&p, &a, &b, &w).unwrap(), "invalid witness"),
            WitnessOutcome::NotFound { .. } => return Err(format!("no witness for {a:?}, {b:?} in {p:?}")),
        }
        positives += 1;
    }
    let shape = RandomShape {
        max_rank: 3,
        max_angles: 2,
        max_multiplicity: 2,
        arities: vec![3, 4, 5],
    };
    let mut negatives = 0;
    while negatives < 50 {
        let p = random_presentation(&mut rng, &shape);
        let a = random_object(&mut rng, p.rank(), 2);
        let b = random_object(&mut rng, p.rank(), 2);
        if k0(&p).equal_classes(&a, &b).unwrap() {
            continue;
        }
        ensure!(witness_search(&p, &a, &b, 2).unwrap().witness().is_none(), "witness for unequal classes in {p:?}");
        negatives += 1;
    }
    let time = within(start, Duration::from_secs(60))?;
    Ok(format!("50 constructed pairs witnessed, 50 unequal pairs never witnessed ({time})"))
}

fn criterion_7() -> Outcome {
    let reg = CheckRegistry::standard();
    let r = ring(&samples::f2_tensor()).map_err(|e| e.to_string())?;
    let g = r.k0().group();
    ensure!(g.order() == Some(BigInt::from(2)), "F2 ring has order {:?}", g.order());
    let one = r.unit_class();
    ensure!(!one.is_zero() && r.mul(&one, &one).unwrap() == one, "unit is not a nonzero idempotent");
    let ideals = enumerate_ideals(&r).unwrap();
    ensure!(ideals.len() == 2, "{} ideals in F2", ideals.len());
    ensure!(ideals.iter().all(|i| i.prime), "F2 prime flags {:?}", ideals.iter().map(|i| i.prime).collect::<Vec<_>>());
    let rep = verify_tensor_correspondence(&r, &reg, &Default::default()).unwrap();
    ensure!(rep.all_verified(), "F2 tensor correspondence not verified");

    let (code, v) = cli_json(&["ring", "--json", data("f2.json").to_str().unwrap()])?;
    ensure!(code == 0 && v["results"]["ideal_count"] == 2 && v["results"]["all_verified"] == true, "CLI ring on F2: {code}");

    let r = ring(&samples::componentwise_tensor()).map_err(|e| e.to_string())?;
    let ideals = enumerate_ideals(&r).unwrap();
    ensure!(ideals.len() == 4, "{} ideals in F2 × F2", ideals.len());
    let zero = angk0::lattice::Subgroup::trivial(r.k0().group());
    ensure!(!is_prime_ideal(&r, &zero).unwrap(), "0 is prime in F2 × F2");
    let rep = verify_tensor_correspondence(&r, &reg, &Default::default()).unwrap();
    ensure!(rep.all_verified() && rep.excluded.len() == 1, "F2 × F2 correspondence");
    Ok("F2: 2 ideals, both prime; F2 × F2: 4 ideals, 0 not prime".into())
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut checks = 0;
    for _ in 0..20 {
        let n = *[3usize, 5, 7].choose(&mut rng).unwrap();
        let t = random_monoid_tensor(&mut rng, n, 6, 2);
        let r = ring(&t).map_err(|e| format!("generated tensor rejected: {e}"))?;
        let rank = t.base().rank();
        let rows = r.k0().relation_lattice().basis_rows();
        for _ in 0..10 {
            let v = random_object(&mut rng, rank, 3);
            let w = random_object(&mut rng, rank, 3);
            let direct = r.k0().class_of(&tensor_objects(&t, &v, &w).unwrap()).unwrap();
            let mut lift = w.to_big();
            for row in &rows {
                let c = BigInt::from(rng.gen_range(-3..=3));
                for (x, y) in lift.iter_mut().zip(row) {
                    *x += &c * y;
                }
            }
            ensure!(r.mul_lifts(&v.to_big(), &lift).unwrap() == direct, "class depends on the lift in {t:?}");
            checks += 1;
        }
    }
    Ok(format!("20 tensor presentations, {checks} shifted lifts"))
}

fn criterion_9() -> Outcome {
    let id = samples::identity_embedding(&samples::g1());
    let h = induced_hom(&id).map_err(|e| e.to_string())?;
    ensure!(h.matrix() == &IntMatrix::identity(3), "identity embedding matrix");
    ensure!(check_surjective(&h), "identity not surjective");

    let e = samples::synthetic_embedding();
    let kt = k0(&e.t);
    ensure!(kt.group().invariant_factors().is_empty() && kt.group().free_rank() == 1, "K0(T) is not Z");
    let h = induced_hom(&e).map_err(|e| e.to_string())?;
    ensure!(check_surjective(&h), "synthetic instance not surjective");

    let h = induced_hom(&samples::unreachable_embedding()).map_err(|e| e.to_string())?;
    ensure!(!check_surjective(&h), "unreachable instance reported surjective");

    let c = |f: &str| data(&format!("cluster/{f}")).to_string_lossy().into_owned();
    let (code, v) = cli_json(&["hom", "--json", &c("t_periodic.json"), &c("c_periodic.json"), &c("map_periodic.json")])?;
    ensure!(code == 0 && v["results"]["surjective"] == true, "CLI synthetic instance");
    let (code, v) = cli_json(&["hom", "--json", &c("t_unreachable.json"), &c("c_periodic.json"), &c("map_unreachable.json")])?;
    ensure!(code == 0 && v["results"]["surjective"] == false, "CLI unreachable instance");
    Ok("identity, synthetic Z → Z and unreachable instances as expected".into())
}

fn element_subset_count(g: &FgAbelianGroup) -> usize {
    let elements = g.elements().unwrap();
    let n = elements.len();
    let zero = elements.iter().position(|x| x.is_zero()).unwrap();
    let sum: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| elements.iter().position(|x| *x == g.add(&elements[i], &elements[j])).unwrap())
                .collect()
        })
        .collect();
    let mut count = 0;
    for mask in 0u32..(1 << n) {
        if mask & (1 << zero) == 0 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        if members.iter().all(|&i| members.iter().all(|&j| mask & (1 << sum[i][j]) != 0)) {
            count += 1;
        }
    }
    count
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for case in 0..1000 {
        let rows = rng.gen_range(1..=3);
        let cols = rng.gen_range(1..=3);
        let raw: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let m = IntMatrix::from_rows(cols, raw.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect());
        let s = smith_normal_form(&m);
        ensure!(&(&s.u * &m) * &s.v == s.d, "case {case}: U·M·V ≠ D for {raw:?}");
        ensure!(s.u.is_unimodular() && s.v.is_unimodular(), "case {case}: transforms not unimodular");
        let diag = s.diagonal();
        for w in diag.windows(2) {
            ensure!(w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()), "case {case}: chain {diag:?}");
        }
        let oracle = snf_oracle(raw.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect(), cols);
        let got: Vec<i128> = diag.iter().map(|x| x.abs().to_i128().unwrap()).collect();
        ensure!(got == oracle, "case {case}: {got:?} vs oracle {oracle:?} for {raw:?}");
        let h = hermite_normal_form(&m);
        ensure!(&h.u * &m == h.h && h.u.is_unimodular(), "case {case}: HNF transform");
        ensure!(Lattice::from_matrix(&m) == Lattice::from_matrix(&h.h), "case {case}: HNF span");
    }

    let mut groups: Vec<FgAbelianGroup> = Vec::new();
    fn lists(prev: u64, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        out.push(cur.clone());
        let mut d = if prev == 1 { 2 } else { prev };
        while d <= left {
            if d % prev == 0 {
                cur.push(d);
                lists(d, left / d, cur, out);
                cur.pop();
            }
            d += 1;
        }
    }
    let mut all = Vec::new();
    lists(1, 16, &mut Vec::new(), &mut all);
    for f in &all {
        let r = f.len();
        let rows = (0..r).map(|i| (0..r).map(|j| BigInt::from(if i == j { f[i] } else { 0 })).collect()).collect();
        groups.push(angk0::lattice::quotient_by_rows(r, rows).unwrap());
    }
    for p in [samples::g1(), samples::g2()] {
        groups.push(k0(&p).group().clone());
    }
    groups.push(k0(samples::componentwise_tensor().base()).group().clone());
    for g in &groups {
        let got = enumerate_subgroups(g).unwrap().len();
        let want = element_subset_count(g);
        ensure!(got == want, "{got} subgroups vs {want} from subsets for {:?}", g.invariant_factors());
    }
    let time = within(start, Duration::from_secs(120))?;
    Ok(format!("1000 matrices, {} groups of order ≤ 16 ({time})", groups.len()))
}

fn criterion_11() -> Outcome {
    let path = data("g1.json");
    let args = ["classify", "--json", path.to_str().unwrap()];
    let (c1, one) = cli(&args, Some("1"));
    let (c4, four) = cli(&args, Some("4"));
    let (c1b, again) = cli(&args, Some("1"));
    ensure!(c1 == 0 && c4 == 0 && c1b == 0, "exit codes {c1}, {c4}, {c1b}");
    ensure!(!one.is_empty() && one == four && one == again, "reports differ between runs");
    Ok(format!("{} identical bytes", one.len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("golden G1: K0 = (Z/2)^2", criterion_1),
        ("G1 classification round trip", criterion_2),
        ("golden G2: K0 = Z/2", criterion_3),
        ("class map properties on 100 presentations", criterion_4),
        ("rotation closure of Euler vectors", criterion_5),
        ("witness soundness and bounded completeness", criterion_6),
        ("tensor suite", criterion_7),
        ("ring multiplication is well defined", criterion_8),
        ("cluster hom suite", criterion_9),
        ("normal form and subgroup oracles", criterion_10),
        ("determinism across thread counts", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
