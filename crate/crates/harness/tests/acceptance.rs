//! The nine acceptance criteria, one test each. Every test prints a single
//! `PASS`/`FAIL` line; run with `--nocapture` to see them.

use std::time::{Duration, Instant};

use leibniz::constructions::{
    adjoint_hemisemidirect, adjoint_module, m_construct, m_tilde, natural_module, sl, stray_sl2_example,
    symmetric_square,
};
use leibniz::lie::{exp_nilpotent, is_derivation, levi_decomposition, levi_subalgebras_hemi, malcev_conjugator};
use leibniz::linalg::unit;
use leibniz::pairing::{check_associative, form_radical, pair_of_transverse_lagrangians};
use leibniz::{Algebra, Matrix, QMatrix, QSubspace, Scalar, Subspace, Q};
use leibniz_harness::corpus::{builtin, quintuples, CorpusEntry};
use leibniz_harness::drivers::{
    construct_nilpotent_lagrangian, decompose, hierarchy_witnesses, maximal_lie_sample, symmetric_criterion,
    verify_maximal_intersection, Options,
};
use leibniz_harness::report::Status;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn conclude(n: usize, name: &str, outcome: Outcome) {
    match outcome {
        Ok(msg) => println!("PASS criterion {n} ({name}): {msg}"),
        Err(msg) => {
            println!("FAIL criterion {n} ({name}): {msg}");
            panic!("criterion {n} failed: {msg}");
        }
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure!(t < limit, "{what} took {t:?}, limit {limit:?}");
    Ok(t)
}

/// Left central, rank one, and split up to a line.
fn split_rank_one(e: &CorpusEntry) -> bool {
    let a = &e.algebra;
    a.classify().left_central && a.rank() == 1 && pair_of_transverse_lagrangians(a).is_ok()
}

fn restrict_to(space: &QSubspace, op: &QMatrix) -> QMatrix {
    space.restrict_map(op, space).expect("the subspace is invariant")
}

fn joint_kernel(ops: &[QMatrix], n: usize) -> QSubspace {
    Matrix::vstack(n, ops).kernel()
}

fn shift(m: &QMatrix, by: i64) -> QMatrix {
    m.sub(&Matrix::identity(m.rows()).scale(&Q::from_i64(by)))
}

#[test]
fn criterion_1_hierarchy_is_strict() {
    let run = || -> Outcome {
        let h = hierarchy_witnesses();
        ensure!(h.report.status == Status::Verified, "{}", h.report);
        let levels: Vec<u8> = h.entries.iter().map(|e| e.algebra.classify().level()).collect();
        ensure!(levels == [4, 3, 2, 1], "levels {levels:?}");
        for e in &h.entries {
            let f = e.algebra.classify();
            ensure!(f.hierarchy_consistent(), "{} has inconsistent flags", e.id);
            if let Some(v) = f.witness {
                let residue = e.algebra.replay(&v);
                ensure!(residue.iter().any(|x| !x.is_zero()), "{} witness does not replay", e.id);
            }
        }
        let ids: Vec<&str> = h.entries.iter().map(|e| e.id.as_str()).collect();
        Ok(format!("levels {levels:?} for {ids:?}, each failing law replays"))
    };
    conclude(1, "hierarchy strictness", run());
}

#[test]
fn criterion_2_unique_levi_with_stray_sl2() {
    let run = || -> Outcome {
        let start = Instant::now();
        let ex = stray_sl2_example::<Q>().map_err(|e| e.to_string())?;
        let m = &ex.algebra;
        ensure!(m.dim() == 14, "dimension {}", m.dim());
        ensure!(ex.hom_s_dim == 0, "dim Hom_S(S, N) = {}", ex.hom_s_dim);
        ensure!(ex.hom_t_dim == 1, "dim Hom_T(T, N) = {}", ex.hom_t_dim);

        // Highest-weight oracle: the adjoint of sl(3) has highest weight
        // (1, 1) on (H1, H2); the adjoint of the root sl(2) has weight 2.
        let n = &ex.n;
        let rho = |k: usize| restrict_to(n, &m.left_mult(&unit(14, k)));
        let (e12, e13, e23, h1, h2) = (rho(0), rho(1), rho(2), rho(3), rho(4));
        let hw_s = joint_kernel(&[e12.clone(), e13, e23, shift(&h1, 1), shift(&h2, 1)], n.dim());
        let hw_t = joint_kernel(&[e12, shift(&h1, 2)], n.dim());
        ensure!(hw_s.dim() == ex.hom_s_dim, "oracle gives {} for S", hw_s.dim());
        ensure!(hw_t.dim() == ex.hom_t_dim, "oracle gives {} for T", hw_t.dim());

        ensure!(m.is_closed(&ex.t1), "T1 is not closed");
        let t1 = m.restrict(&ex.t1).map_err(|e| e.to_string())?;
        ensure!(t1.classify().lie, "T1 is not Lie");
        ensure!(!ex.t1.is_subspace_of(&ex.s), "T1 lies in S");

        let levi = levi_decomposition(m).map_err(|e| e.to_string())?;
        ensure!(levi.levi == ex.s, "Levi subalgebra differs from S");
        let fam = levi_subalgebras_hemi(&sl::<Q>(3), &symmetric_square(&natural_module(3)).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        ensure!(fam.parameter_dim() == 0, "family dimension {}", fam.parameter_dim());
        let t = within(start, Duration::from_secs(10), "the sl(3) example")?;
        Ok(format!(
            "Hom_S = 0, Hom_T = 1 (highest-weight oracle agrees), T1 Lie and outside S, S unique Levi, {t:.2?}"
        ))
    };
    conclude(2, "unique Levi subalgebra with a stray sl(2)", run());
}

#[test]
fn criterion_3_levi_family_and_conjugators() {
    let run = || -> Outcome {
        let start = Instant::now();
        let s = sl::<Q>(2);
        let fam = levi_subalgebras_hemi(&s, &adjoint_module(&s).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure!(fam.parameter_dim() == 1, "family dimension {}", fam.parameter_dim());
        let m = &fam.algebra;
        ensure!(*m == adjoint_hemisemidirect(&s).map_err(|e| e.to_string())?, "family algebra differs");
        let member = |t: i64| fam.member(&fam.parameter(&[Q::from_i64(t)])).map_err(|e| e.to_string());
        let params = [0, 1, -2, 3];
        let members = params.iter().map(|&t| member(t)).collect::<Result<Vec<_>, _>>()?;
        for w in members.windows(2) {
            ensure!(w[0] != w[1], "members coincide");
        }
        for (i, s1) in members.iter().enumerate() {
            for s2 in &members[i + 1..] {
                let c = malcev_conjugator(m, s1, s2).map_err(|e| e.to_string())?;
                let f = &c.derivation;
                ensure!(f.mul(f).is_zero(), "f^2 != 0");
                ensure!(is_derivation(m, f), "f is not a derivation");
                let g = exp_nilpotent(f).map_err(|e| e.to_string())?;
                ensure!(s1.image(&g) == *s2, "exp(f) does not map S1 onto S2");
            }
        }
        let mut exponentiated = 0;
        for i in 0..m.dim() {
            let d = m.left_mult(&unit(m.dim(), i));
            for s in &members {
                ensure!(s.image(&d).is_subspace_of(s), "ad e{i} moves a Levi subalgebra");
                if let Ok(g) = exp_nilpotent(&d) {
                    ensure!(s.image(&g) == *s, "exp(ad e{i}) moves a Levi subalgebra");
                    exponentiated += 1;
                }
            }
        }
        let t = within(start, Duration::from_secs(5), "the adjoint example")?;
        Ok(format!(
            "family dim 1, {} conjugators with f^2 = 0, {} inner automorphism checks, {t:.2?}",
            members.len() * (members.len() - 1) / 2,
            exponentiated
        ))
    };
    conclude(3, "Levi family and square-zero conjugators", run());
}

#[test]
fn criterion_4_psi_associativity() {
    let run = || -> Outcome {
        let mut algebras: Vec<(String, Algebra)> = builtin().into_iter().map(|e| (e.id, e.algebra)).collect();
        for (name, q) in quintuples() {
            algebras.push((format!("{name} (M)"), m_construct(&q).map_err(|e| e.to_string())?));
        }
        let mut central = 0;
        for (id, a) in &algebras {
            if a.classify().left_central {
                central += 1;
                ensure!(check_associative(a).is_none(), "{id}: psi is not associative");
            }
        }
        let m = builtin().into_iter().find(|e| e.id == "sl2-natural").ok_or("missing entry")?.algebra;
        let v = check_associative(&m).ok_or("no witness on sl2 with its natural module")?;
        let br = |x: &[Q], y: &[Q]| m.bracket(x, y).expect("same dimension");
        let psi = |x: &[Q], y: &[Q]| -> Vec<Q> { br(x, y).into_iter().zip(br(y, x)).map(|(p, q)| p + q).collect() };
        let lhs = psi(&br(&v.a, &v.b), &v.c);
        let rhs = psi(&v.a, &br(&v.b, &v.c));
        ensure!(lhs != rhs, "witness does not violate associativity");
        Ok(format!("associative on {central} left central algebras; exact witness on sl2-natural"))
    };
    conclude(4, "psi associativity", run());
}

#[test]
fn criterion_5_quintuple_construction() {
    let run = || -> Outcome {
        let mut names = Vec::new();
        for (name, q) in quintuples() {
            let m = m_construct(&q).map_err(|e| e.to_string())?;
            ensure!(m.classify().left_central, "{name}: M is not left central");
            ensure!(form_radical(&m) == q.m_radical(), "{name}: radical of M is not R + R");
            let mt = m_tilde(&q).map_err(|e| e.to_string())?.algebra;
            ensure!(mt.classify().left_central, "{name}: M~ is not left central");
            ensure!(form_radical(&mt).dim() == q.r_dim(), "{name}: radical of M~ has dim {}", form_radical(&mt).dim());
            ensure!(mt.rank() == 1, "{name}: M~ has rank {}", mt.rank());
            names.push(format!("{name} ({})", m.dim()));
        }
        ensure!(names.len() >= 3, "only {} quintuples", names.len());
        Ok(format!("M left central with radical R + R, M~ rank 1 with radical R: {}", names.join(", ")))
    };
    conclude(5, "quintuple construction", run());
}

#[test]
fn criterion_6_maximal_lie_intersection() {
    let run = || -> Outcome {
        let start = Instant::now();
        let members: Vec<CorpusEntry> = builtin()
            .into_iter()
            .filter(|e| e.algebra.dim() <= 8 && split_rank_one(e))
            .collect();
        ensure!(!members.is_empty(), "no split rank-one members");
        let mut samples = 0;
        for e in &members {
            let a = &e.algebra;
            let r = form_radical(a);
            for seed in 0..20 {
                let s = maximal_lie_sample(a, seed)?;
                ensure!(r.is_subspace_of(&s.subalgebra), "{}: seed {seed} misses R", e.id);
                let lie = a.restrict(&s.subalgebra).map(|l| l.classify().lie).unwrap_or(false);
                ensure!(lie, "{}: seed {seed} is not a Lie subalgebra", e.id);
                samples += 1;
            }
            let report = verify_maximal_intersection(&e.id, a, Options { seed: 7, trials: 20 });
            ensure!(report.status == Status::Verified, "{report}");
        }
        let t = within(start, Duration::from_secs(30), "sampling")?;
        let ids: Vec<&str> = members.iter().map(|e| e.id.as_str()).collect();
        Ok(format!("{samples} samples contain R; intersection reaches R on {ids:?}, {t:.2?}"))
    };
    conclude(6, "maximal Lie subalgebras meet in R", run());
}

#[test]
fn criterion_7_nilpotent_lagrangian() {
    let run = || -> Outcome {
        let members: Vec<CorpusEntry> = builtin().into_iter().filter(split_rank_one).collect();
        ensure!(!members.is_empty(), "no split rank-one members");
        for e in &members {
            let a = &e.algebra;
            let c = construct_nilpotent_lagrangian(a).map_err(|err| format!("{}: {err}", e.id))?;
            let r = form_radical(a).dim();
            ensure!(c.lagrangian.dim() == r + (a.dim() - r) / 2, "{}: dim L = {}", e.id, c.lagrangian.dim());
            let post = c.postconditions(a);
            ensure!(post == [true; 3], "{}: postconditions {post:?}", e.id);
        }
        let ids: Vec<&str> = members.iter().map(|e| e.id.as_str()).collect();
        Ok(format!("L maximal isotropic, L/R nilpotent, L inside B on {ids:?}"))
    };
    conclude(7, "nilpotent maximal isotropic subalgebra", run());
}

#[test]
fn criterion_8_symmetric_decomposition() {
    let run = || -> Outcome {
        let mut done = Vec::new();
        for (name, q) in quintuples() {
            let abelian = |l: &Algebra, r: QSubspace| l.quotient_map(&r).map(|x| x.algebra.is_abelian()).unwrap_or(false);
            if !(abelian(&q.l1, q.r_in_l1()) && abelian(&q.l2, q.r_in_l2())) {
                continue;
            }
            let mt = m_tilde(&q).map_err(|e| e.to_string())?.algebra;
            let d = decompose(&mt).map_err(|e| format!("{name}: {e}"))?;
            let r = form_radical(&mt).dim();
            ensure!(d.h.codim() == (mt.dim() - r) % 2, "{name}: codim H = {}", d.h.codim());
            ensure!(d.iso.is_isomorphism(), "{name}: M~(q') is not isomorphic to H");
            ensure!(d.phi.kernel() == d.quintuple.diagonal_ideal(), "{name}: ker phi is not D");
            ensure!(d.iso.source().dim() == d.h.dim(), "{name}: dimensions differ");
            done.push(name);
        }
        ensure!(done.len() >= 3, "only {done:?} have abelian quotients");
        let mut entries = builtin();
        entries.extend(hierarchy_witnesses().entries);
        for e in &entries {
            let r = symmetric_criterion(&e.id, &e.algebra);
            ensure!(r.status == Status::Verified, "{r}");
        }
        Ok(format!(
            "round trip with exact isomorphism on {done:?}; symmetric iff M' inside R on {} algebras",
            entries.len()
        ))
    };
    conclude(8, "symmetric rank-one decomposition", run());
}

fn random_rational(rng: &mut ChaCha8Rng) -> Q {
    Q::new(rng.gen_range(-4i64..=4).into(), rng.gen_range(1i64..=3).into())
}

/// `rows x cols` of rank at most `rank`.
fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, rank: usize) -> QMatrix {
    let a = Matrix::from_fn(rows, rank, |_, _| random_rational(rng));
    let b = Matrix::from_fn(rank, cols, |_, _| random_rational(rng));
    a.mul(&b)
}

fn random_subspace(rng: &mut ChaCha8Rng, n: usize) -> QSubspace {
    let k = rng.gen_range(0..=n);
    let r = rng.gen_range(1..=n);
    Subspace::row_space(&random_matrix(rng, k, n, r))
}

#[test]
fn criterion_9_exact_linear_algebra() {
    let run = || -> Outcome {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for i in 0..1000 {
            let n = rng.gen_range(1..=7);
            let (u, v) = (random_subspace(&mut rng, n), random_subspace(&mut rng, n));
            let sum = u.sum(&v).map_err(|e| e.to_string())?;
            let meet = u.intersect(&v).map_err(|e| e.to_string())?;
            ensure!(sum.dim() + meet.dim() == u.dim() + v.dim(), "dimension formula fails on case {i}");
        }
        for i in 0..200 {
            let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
            let k = rng.gen_range(1..=6);
            let a = random_matrix(&mut rng, r, c, k);
            let x: Vec<Q> = (0..c).map(|_| random_rational(&mut rng)).collect();
            let b = a.mul_vec(&x);
            let y = a.solve_vec(&b).map_err(|e| format!("case {i}: {e}"))?;
            ensure!(a.mul_vec(&y) == b, "nonzero residual on case {i}");
        }
        for i in 0..200 {
            let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
            let k = rng.gen_range(1..=6);
            let a = random_matrix(&mut rng, r, c, k);
            let once = a.rref();
            ensure!(once.rref() == once, "rref is not idempotent on case {i}");
            ensure!(once.rank() == a.rank(), "rref changes the rank on case {i}");
        }
        Ok("1000 dimension-formula, 200 solve-residual and 200 rref-idempotence cases hold exactly".into())
    };
    conclude(9, "exact linear algebra", run());
}
