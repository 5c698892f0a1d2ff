//! End-to-end reproduction checks. Prints one PASS/FAIL line per criterion
//! and exits nonzero if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Signed;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use dialg_core::dias::{check_loday_axioms, enum_dias};
use dialg_core::expansion::{
    check_jordan_dialgebra_identities, collapsed_matrix, expand_monomial, nonlinear_basis, ExpansionMatrix, Pattern,
};
use dialg_core::golden;
use dialg_core::linalg::lll::is_lll_reduced;
use dialg_core::linalg::{hnf_with_transform, lattice_contains, lll_reduce, same_lattice, Modulus, ZMatrix};
use dialg_core::magma::MultilinearBasis;
use dialg_core::perm::{factorial, Perm};
use dialg_core::pipeline::{
    degree6_generators, degree6_nonlinear, degree6_nullspace, degree7_table, identity_from_text,
    nullspace_character, orbit_rank, reconstruct_rows, Degree7Data,
};
use dialg_core::symrep::{
    character_table, decompose, format_decomposition, inner_product, partitions, Representation,
};

type Outcome = std::result::Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn p_big() -> Modulus {
    Modulus::new(1_000_003).unwrap()
}

fn double_factorial(n: usize) -> usize {
    (1..=n).rev().step_by(2).product()
}

fn criterion1() -> Outcome {
    for n in 3..=7 {
        let free = MultilinearBasis::new(n).map_err(|e| e.to_string())?.len();
        ensure(free == double_factorial(2 * n - 3), format!("free({n}) = {free}"))?;
        let dias = enum_dias(n).len();
        ensure(dias == n * factorial(n), format!("Dias({n}) = {dias}"))?;
    }
    Ok("free(n) = (2n-3)!!, Dias(n) = n n! for n = 3..7".into())
}

fn criterion2() -> Outcome {
    let e = ExpansionMatrix::new(3).unwrap().to_z();
    ensure((e.rows(), e.cols()) == (18, 3), "shape")?;
    ensure(e.transpose() == golden::degree3_transpose(), "transpose differs from the reference")?;
    ensure(e.rank() == 3, format!("rank {}", e.rank()))?;
    Ok("18x3, transpose matches, rank 3".into())
}

fn criterion3() -> Outcome {
    let e = ExpansionMatrix::new(4).unwrap().to_z();
    ensure((e.rows(), e.cols()) == (96, 15), "shape")?;
    let sub = e.select_rows(&golden::DEGREE4_SUBMATRIX_ROWS);
    ensure(sub == golden::degree4_submatrix(), "submatrix differs from the reference")?;
    ensure(sub.rank() == 15, format!("submatrix rank {}", sub.rank()))?;
    ensure(e.rank() == 15, "full matrix has a nullspace")?;
    Ok("96x15, submatrix matches with rank 15, nullity 0".into())
}

fn criterion4() -> Outcome {
    let e = ExpansionMatrix::new(5).unwrap();
    ensure((e.rows(), e.cols()) == (600, 105), "shape")?;
    let z = e.to_z();
    let fp = e.to_fp(p_big());
    ensure(z.rank() == 105, format!("rank over Q {}", z.rank()))?;
    ensure(fp.rank() == 105, format!("rank mod p {}", fp.rank()))?;
    let basis = golden::degree5_row_basis();
    let over_q = z.lex_first_row_basis();
    ensure(over_q == basis, "lexicographically first row basis over Q differs")?;
    ensure(fp.lex_first_row_basis() == basis, "lexicographically first row basis mod p differs")?;
    Ok("600x105, rank 105 over Q and F_p, row basis matches".into())
}

struct Degree6 {
    rows: Vec<Vec<i64>>,
}

fn criterion5(out: &mut Option<Degree6>) -> Outcome {
    let e = ExpansionMatrix::new(6).unwrap();
    ensure((e.rows(), e.cols()) == (4320, 945), "shape")?;
    let expected: [&[i64]; 6] = [&[1, 2, 4, 8, 16], &[2, 8, 16], &[2, 4, 16], &[2, 4, 8], &[4, 8], &[4, 8]];
    for (t, want) in expected.iter().enumerate() {
        let got = e.coefficient_set(t);
        ensure(got == want.iter().copied().collect::<BTreeSet<_>>(), format!("type {t} coefficients {got:?}"))?;
    }
    let m = p_big();
    let s = degree6_nullspace(m).map_err(|e| e.to_string())?;
    ensure(s.rank == golden::DEGREE6_RANK, format!("rank {}", s.rank))?;
    ensure(s.nullity() == golden::DEGREE6_NULLITY, format!("nullity {}", s.nullity()))?;
    let residues: BTreeSet<u32> = (0..s.nullspace.rows()).flat_map(|i| s.nullspace.row(i).to_vec()).collect();
    let rows = reconstruct_rows(&s.nullspace, golden::DEGREE6_SCALE);
    let got: Vec<(usize, BTreeSet<i64>)> =
        rows.iter().map(|r| (r.iter().filter(|&&x| x != 0).count(), r.iter().copied().collect())).collect();
    let want: Vec<(usize, BTreeSet<i64>)> =
        golden::degree6_reconstruction().into_iter().map(|r| (r.nonzero, r.entries)).collect();
    *out = Some(Degree6 { rows: rows.clone() });
    let counts: Vec<usize> = got.iter().map(|g| g.0).collect();
    ensure(got == want, format!("reconstructed rows differ: nonzero counts {counts:?}"))?;
    ensure(residues == golden::degree6_residues(), format!("{} residues differ from the reference", residues.len()))?;
    Ok(format!("4320x945, rank 937, nullity 8, nonzero counts {counts:?}"))
}

fn criterion6(d6: &Option<Degree6>) -> Outcome {
    let rows = match d6 {
        Some(d) => d.rows.clone(),
        None => return Err("degree 6 nullspace unavailable".into()),
    };
    let chi = nullspace_character(&rows).map_err(|e| e.to_string())?;
    ensure(chi == golden::degree6_character(), format!("character {chi:?}"))?;
    let dec = format_decomposition(&decompose(6, &chi).map_err(|e| e.to_string())?);
    ensure(dec == golden::degree6_decomposition(), format!("decomposition {dec}"))?;
    Ok(format!("character {chi:?}, {dec}"))
}

fn identities(pattern: Pattern, text: &[String]) -> std::result::Result<ZMatrix, String> {
    let rows: Vec<Vec<i64>> =
        text.iter().map(|s| identity_from_text(pattern, s)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    Ok(ZMatrix::from_i64(&rows))
}

fn criterion7() -> Outcome {
    ensure(collapsed_matrix(Pattern::X6) == golden::x6_expansion(), "x^6 matrix differs from the reference")?;
    let r = degree6_nonlinear(Pattern::X6).map_err(|e| e.to_string())?;
    ensure(r.nullity() == 3, format!("nullity {}", r.nullity()))?;
    let paper = identities(Pattern::X6, &golden::x6_identities())?;
    ensure(lattice_contains(&r.identities, &paper), "identities not in the nullspace lattice")?;
    ensure(same_lattice(&r.identities, &paper), "identities do not span the nullspace lattice")?;
    // the published transform spans the same kernel
    let t = golden::x6_transform();
    ensure(t.determinant().abs() == BigInt::from(1), "published transform not unimodular")?;
    ensure(same_lattice(&t.select_rows(&[3, 4, 5]), &r.identities), "published kernel rows differ")?;
    Ok("x^6 matrix matches, nullity 3, lattice equals identities (1)-(3)".into())
}

fn criterion8() -> Outcome {
    ensure(collapsed_matrix(Pattern::X5Y) == golden::x5y_expansion(), "x^5 y matrix differs from the reference")?;
    let names: Vec<String> = nonlinear_basis(Pattern::X5Y).iter().map(|m| m.to_string()).collect();
    ensure(names == golden::x5y_basis(), "x^5 y basis order differs")?;
    let r = degree6_nonlinear(Pattern::X5Y).map_err(|e| e.to_string())?;
    let paper = identities(Pattern::X5Y, &golden::x5y_identities())?;
    ensure(lattice_contains(&r.identities, &paper), "identities (4)-(7) not in the nullspace lattice")?;
    ensure(r.nullity() == 4, format!("nullity {}", r.nullity()))?;
    let equal = same_lattice(&r.identities, &paper);
    Ok(format!(
        "36x20 matrix matches, rank {} nullity {}, identities (4)-(7) contained; lattice {}",
        r.rank,
        r.nullity(),
        if equal { "equal" } else { "strictly larger" }
    ))
}

fn criterion9() -> Outcome {
    let gens = degree6_generators().map_err(|e| e.to_string())?;
    ensure(gens.len() == 7, format!("{} generators", gens.len()))?;
    let orbit = orbit_rank(&gens, p_big()).map_err(|e| e.to_string())?;
    ensure(orbit == 8, format!("orbit of the linearizations has rank {orbit}"))?;
    let data = Degree7Data::new(&gens).map_err(|e| e.to_string())?;
    let want = golden::degree7_table();
    let mut tables = Vec::new();
    for p in [101, 1_000_003] {
        let t = degree7_table(&data, Modulus::new(p).unwrap()).map_err(|e| e.to_string())?;
        let heads: Vec<String> = t.reports.iter().map(|r| r.partition.compact()).collect();
        ensure(heads == want.partitions, "partition order")?;
        let row = |f: fn(&dialg_core::pipeline::PartitionReport) -> usize| t.reports.iter().map(f).collect::<Vec<_>>();
        ensure(t.reports.iter().all(|r| r.consistent), format!("p={p}: known identities do not vanish"))?;
        ensure(t.reports.iter().all(|r| r.is_monotone()), format!("p={p}: ranks not monotone"))?;
        ensure(row(|r| r.rank_s) == want.rank_s, format!("p={p}: S row {:?}", row(|r| r.rank_s)))?;
        ensure(row(|r| r.rank_sc) == want.rank_sc, format!("p={p}: SC row {:?}", row(|r| r.rank_sc)))?;
        ensure(row(|r| r.rank_n) == want.rank_n, format!("p={p}: N row {:?}", row(|r| r.rank_n)))?;
        ensure(row(|r| r.new_identities()) == want.new, format!("p={p}: new row"))?;
        ensure(t.total() == want.total, format!("p={p}: total {}", t.total()))?;
        ensure(t.decomposition() == want.decomposition, format!("p={p}: {}", t.decomposition()))?;
        ensure(
            t.check_decomposition().map_err(|e| e.to_string())? == want.decomposition,
            "decomposition from the character differs",
        )?;
        tables.push(t.reports);
    }
    ensure(tables[0] == tables[1], "ranks differ between primes")?;
    Ok(format!("table reproduced at p = 101 and 1000003, total {}", want.total))
}

fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize, bound: i64) -> ZMatrix {
    let r: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
    ZMatrix::from_i64(&r)
}

fn criterion10() -> Outcome {
    let loday = check_loday_axioms(4);
    ensure(loday.holds(), format!("Loday axioms fail: {:?}", loday.failures.first()))?;
    for c in check_jordan_dialgebra_identities() {
        ensure(c.holds(), format!("{} does not vanish", c.name))?;
    }
    for n in 1..=7 {
        let t = character_table(n);
        for (i, a) in t.iter().enumerate() {
            for (j, b) in t.iter().enumerate() {
                let want = if i == j { 1 } else { 0 };
                ensure(inner_product(n, a, b) == BigInt::from(want).into(), format!("orthogonality in S_{n}"))?;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(7);
    let m = Modulus::new(101).unwrap();
    let all7: Vec<Perm> = Perm::all(7).collect();
    for lambda in partitions(7) {
        let rep = Representation::new(&lambda, m).map_err(|e| e.to_string())?;
        for _ in 0..20 {
            let s = &all7[rng.gen_range(0..all7.len())];
            let t = &all7[rng.gen_range(0..all7.len())];
            ensure(rep.matrix(&s.compose(t)) == rep.matrix(s).mul(&rep.matrix(t)), format!("R not a homomorphism on [{lambda}]"))?;
        }
    }
    for case in 0..100 {
        let (r, c) = (rng.gen_range(1..6), rng.gen_range(1..6));
        let a = random_matrix(&mut rng, r, c, 9);
        let h = hnf_with_transform(&a);
        ensure(h.u.determinant().abs() == BigInt::from(1), format!("HNF case {case}: U not unimodular"))?;
        ensure(h.u.mul(&a) == h.h, format!("HNF case {case}: UA != H"))?;
    }
    let mut lll_cases = 0;
    while lll_cases < 100 {
        let n = rng.gen_range(1..5);
        let cols = n + rng.gen_range(0..3);
        let b = random_matrix(&mut rng, n, cols, 20);
        if b.rank() < n {
            continue;
        }
        let r = lll_reduce(&b).map_err(|e| e.to_string())?;
        ensure(same_lattice(&b, &r) && is_lll_reduced(&r), format!("LLL case {lll_cases}"))?;
        lll_cases += 1;
    }
    for n in 3..=6 {
        let basis = MultilinearBasis::new(n).unwrap();
        for _ in 0..20 {
            let mon = basis.get(rng.gen_range(0..basis.len()));
            let sigma = Perm::all(n).nth(rng.gen_range(0..factorial(n))).unwrap();
            let lhs = expand_monomial(&mon.act(&sigma));
            let rhs = expand_monomial(mon).relabel(|x| sigma.images()[x as usize]);
            ensure(lhs == rhs, format!("equivariance fails for {mon} under {sigma}"))?;
        }
    }
    Ok(format!("Loday axioms ({} instances), Jordan identities, S_n representations, HNF, LLL, equivariance", loday.checked))
}

fn report(number: usize, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = f();
    let took = start.elapsed();
    let (ok, msg) = match outcome {
        Ok(m) if took <= limit => (true, m),
        Ok(m) => (false, format!("{m}; took {took:.1?}, limit {limit:?}")),
        Err(m) => (false, m),
    };
    println!("criterion {number:>2}: {} ({took:.2?}) {msg}", if ok { "PASS" } else { "FAIL" });
    ok
}

fn main() {
    let secs = Duration::from_secs;
    let mut d6 = None;
    let results = [
        report(1, secs(1), criterion1),
        report(2, secs(1), criterion2),
        report(3, secs(1), criterion3),
        report(4, secs(10), criterion4),
        report(5, secs(300), || criterion5(&mut d6)),
        report(6, secs(60), || criterion6(&d6)),
        report(7, secs(1), criterion7),
        report(8, secs(1), criterion8),
        report(9, secs(1800), criterion9),
        report(10, secs(600), criterion10),
    ];
    let failed = results.iter().filter(|&&ok| !ok).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
