//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines are always printed:
//! `cargo test --test acceptance`.

use std::f64::consts::PI;
use std::process::{Command, ExitCode};
use std::time::Instant;

use nalgebra::DMatrix;

use hyperbolic_clifford::cli;
use hyperbolic_clifford::duality::dsp;
use hyperbolic_clifford::extensor::{Operator, Side};
use hyperbolic_clifford::exterior::{bits, ordered_blade, BaseSpace, Multivector};
use hyperbolic_clifford::fields::{curvature, curvature_extensor, presets, torsion, Connection, VectorField};
use hyperbolic_clifford::hyperbolic::{clifford, clifford_map_phi, gram_inner, hodge, hv_inner, sigma};
use hyperbolic_clifford::random::{self, TestRng};
use hyperbolic_clifford::suites::{run_suite, SuiteReport};

const SEED: u64 = 7;
const CASES: usize = 100;
const ALGEBRA_TOL: f64 = 1e-9;
const DSP_ORACLE_TOL: f64 = 1e-10;
const FIELD_TOL: f64 = 1e-8;
const HYPERBOLIC_SECONDS: f64 = 30.0;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

/// Runs `suite` at each dimension and summarizes the worst residual.
fn suites(name: &str, dims: &[usize], tol: f64) -> (bool, String) {
    let mut worst: f64 = 0.0;
    let mut failures = 0;
    let mut cases = 0;
    let mut first = String::new();
    for &n in dims {
        let r: SuiteReport = run_suite(name, n, CASES, SEED, tol).expect("known suite");
        worst = if r.max_residual.is_nan() { f64::NAN } else { worst.max(r.max_residual) };
        failures += r.failures.len();
        cases += r.cases;
        if first.is_empty() {
            if let Some(f) = r.failures.first() {
                first = format!("; first failure {} (n={n}, case {}): {:.3e}", f.property, f.case, f.residual);
            }
        }
    }
    (
        failures == 0 && worst <= tol,
        format!("{name} n={dims:?}: {cases} cases, max residual {worst:.3e}, {failures} failures{first}"),
    )
}

fn hyperbolic_criterion() -> Outcome {
    let start = Instant::now();
    let (ok, mut detail) = suites("hyperbolic", &[1, 2, 3], ALGEBRA_TOL);
    let seconds = start.elapsed().as_secs_f64();
    let mut worst: f64 = 0.0;
    for n in 1..=3 {
        let s = sigma(n).unwrap();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let one = Multivector::scalar(s.space(), 1.0);
        worst = worst.max(clifford(&s, &s).unwrap().distance(&one));
        worst = worst.max((gram_inner(&s, &s).unwrap() - sign).abs());
        worst = worst.max(hodge(&s).unwrap().distance(&one.scale(sign)));
    }
    detail += &format!("; σ² = 1, ⟨σ,σ⟩ = ⋆σ = (−1)^n residual {worst:.1e}; {seconds:.1}s");
    outcome(ok && worst <= ALGEBRA_TOL && seconds <= HYPERBOLIC_SECONDS, detail)
}

fn duality_criterion() -> Outcome {
    let (ok, detail) = suites("duality", &[2, 3], ALGEBRA_TOL);
    // ⟨ω¹∧⋯∧ω^p, v₁∧⋯∧v_p⟩ = det[ω^i(v_j)] on 50 simple pairs
    let mut r = random::rng(SEED);
    let (v, d) = (BaseSpace::primal(3).unwrap(), BaseSpace::dual(3).unwrap());
    let mut worst: f64 = 0.0;
    for case in 0..50 {
        let p = case % 3 + 1;
        let vs: Vec<Multivector> = (0..p).map(|_| random::vector(&mut r, v)).collect();
        let ws: Vec<Multivector> = (0..p).map(|_| random::vector(&mut r, d)).collect();
        let wedge = |xs: &[Multivector]| xs.iter().skip(1).fold(xs[0].clone(), |a, x| a.wedge(x).unwrap());
        let got = dsp(&wedge(&ws), &wedge(&vs)).unwrap();
        let m = DMatrix::from_fn(p, p, |i, j| {
            ws[i].vector_part().iter().zip(vs[j].vector_part()).map(|(a, b)| a * b).sum::<f64>()
        });
        worst = worst.max((got - m.determinant()).abs());
    }
    let detail = format!("{detail}; determinant oracle on 50 simple pairs, p ≤ 3: {worst:.1e}");
    outcome(ok && worst <= DSP_ORACLE_TOL, detail)
}

/// Leibniz expansion, exact for dyadic entries.
fn leibniz(m: &DMatrix<f64>, rows: &[usize], cols: &[usize]) -> f64 {
    if rows.is_empty() {
        return 1.0;
    }
    let mut total = 0.0;
    for (k, &c) in cols.iter().enumerate() {
        let rest: Vec<usize> = cols.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &x)| x).collect();
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        total += sign * m[(rows[0], c)] * leibniz(m, &rows[1..], &rest);
    }
    total
}

/// Entry `(I, J)` of `λ̲` is the minor of rows `I`, columns `J`.
fn epe_by_minors(m: &DMatrix<f64>, row: u32, col: u32) -> f64 {
    let (r, c): (Vec<usize>, Vec<usize>) = (bits(row).collect(), bits(col).collect());
    if r.len() != c.len() {
        return 0.0;
    }
    leibniz(m, &r, &c)
}

/// `γ̆(b_J)` replaces one factor of `b_J` at a time by its image.
fn ce_by_replacement(m: &DMatrix<f64>, n: usize, col: u32) -> Vec<f64> {
    let mut out = vec![0.0; 1 << n];
    let idx: Vec<usize> = bits(col).collect();
    for slot in 0..idx.len() {
        for i in 0..n {
            let mut moved = idx.clone();
            moved[slot] = i;
            if let Some((mask, s)) = ordered_blade(&moved) {
                out[mask as usize] += s * m[(i, idx[slot])];
            }
        }
    }
    out
}

fn extensor_criterion() -> Outcome {
    let (ok, detail) = suites("extensor", &[2, 3], ALGEBRA_TOL);
    let mut r = random::rng(SEED);
    let mut mismatches = 0;
    for n in [2, 3] {
        for case in 0..20 {
            let side = if case % 2 == 0 { Side::Primal } else { Side::Dual };
            let m = random::dyadic_matrix(&mut r, n);
            let op = Operator::new(side, m.clone()).unwrap();
            let (epe, ce) = (op.epe(), op.ce());
            let space = side.space(n).unwrap();
            for col in 0..(1u32 << n) {
                let blade = Multivector::blade(space, col, 1.0).unwrap();
                let (epe_image, ce_image) = (epe.apply(&blade).unwrap(), ce.apply(&blade).unwrap());
                let ce_col = ce_by_replacement(&m, n, col);
                for row in 0..(1u32 << n) {
                    mismatches += (epe_image.coeff(row) != epe_by_minors(&m, row, col)) as usize;
                    mismatches += (ce_image.coeff(row) != ce_col[row as usize]) as usize;
                }
            }
        }
    }
    let detail = format!("{detail}; exact blade-basis reconstruction of λ̲ and γ̆: {mismatches} mismatched entries");
    outcome(ok && mismatches == 0, detail)
}

fn clifford_map_criterion() -> Outcome {
    let (ok, detail) = suites("clifford-map", &[1, 2, 3], ALGEBRA_TOL);
    let mut r = random::rng(SEED);
    let mut worst: f64 = 0.0;
    for n in 1..=3 {
        for _ in 0..CASES {
            let (x, y) = (random::vecfor(&mut r, n), random::vecfor(&mut r, n));
            let (px, py) = (clifford_map_phi(&x).unwrap(), clifford_map_phi(&y).unwrap());
            let id = DMatrix::<f64>::identity(1 << n, 1 << n);
            worst = worst.max((&px * &py + &py * &px - id * (2.0 * hv_inner(&x, &y))).amax());
        }
    }
    let detail = format!("{detail}; φ_xφ_y + φ_yφ_x − 2⟨x,y⟩Id on 100 pairs per n: {worst:.1e}");
    outcome(ok && worst <= ALGEBRA_TOL, detail)
}

fn differential_criterion() -> Outcome {
    let (ok, detail) = suites("differential", &[2, 3], FIELD_TOL);
    outcome(ok, detail)
}

/// Sphere coefficients, written out by hand: `γ^1_{22} = −sin u cos u`,
/// `γ^2_{12} = γ^2_{21} = cot u`, with their `u`-derivatives.
fn sphere_gamma(u: f64) -> ([[[f64; 2]; 2]; 2], [[[f64; 2]; 2]; 2]) {
    let mut g = [[[0.0; 2]; 2]; 2];
    let mut du = [[[0.0; 2]; 2]; 2];
    g[0][1][1] = -u.sin() * u.cos();
    du[0][1][1] = -(2.0 * u).cos();
    g[1][0][1] = u.cos() / u.sin();
    g[1][1][0] = g[1][0][1];
    du[1][0][1] = -1.0 / u.sin().powi(2);
    du[1][1][0] = du[1][0][1];
    (g, du)
}

/// `R^σ_{μνρ} = ∂_μγ^σ_{νρ} − ∂_νγ^σ_{μρ} + γ^σ_{μλ}γ^λ_{νρ} − γ^σ_{νλ}γ^λ_{μρ}`; only `∂_u` is nonzero.
fn sphere_oracle(u: f64, s: usize, mu: usize, nu: usize, rho: usize) -> f64 {
    let (g, du) = sphere_gamma(u);
    let d = |dir: usize, s: usize, a: usize, b: usize| if dir == 0 { du[s][a][b] } else { 0.0 };
    let mut r = d(mu, s, nu, rho) - d(nu, s, mu, rho);
    for l in 0..2 {
        r += g[s][mu][l] * g[l][nu][rho] - g[s][nu][l] * g[l][mu][rho];
    }
    r
}

fn sphere_points(r: &mut TestRng, count: usize) -> Vec<[f64; 2]> {
    (0..count).map(|_| [random::uniform(r, 0.4, 2.7), random::uniform(r, -1.0, 1.0)]).collect()
}

fn coordinate_fields() -> [VectorField; 2] {
    let v = BaseSpace::primal(2).unwrap();
    [VectorField::basis(v, 0).unwrap(), VectorField::basis(v, 1).unwrap()]
}

fn geometry_criterion() -> Outcome {
    let conn: Connection = presets::sphere().connection;
    let d = coordinate_fields();
    let mut r = random::rng(SEED);
    let tau = torsion(&conn, &d[0], &d[1]).unwrap();
    let torsion_worst = sphere_points(&mut r, 10).iter().map(|p| tau.eval(p).max_abs()).fold(0.0, f64::max);
    let rho = curvature(&conn, &d[0], &d[1], &d[1]).unwrap();
    let mut oracle_worst: f64 = 0.0;
    let mut profile = Vec::new();
    let mut points = sphere_points(&mut r, 5);
    points.extend([[0.5, 0.3], [1.0, 0.3], [1.5, 0.3], [PI / 2.0, 0.3]]);
    for p in &points {
        let got = rho.eval(p).vector_part();
        for s in 0..2 {
            oracle_worst = oracle_worst.max((got[s] - sphere_oracle(p[0], s, 0, 1, 1)).abs());
        }
    }
    for u in [0.5, 1.0, 1.5] {
        let got = rho.eval(&[u, 0.3]).vector_part();
        profile.push(format!("u={u}: {:.6} (sin²u {:.6})", got[0], u.sin().powi(2)));
    }
    let detail = format!(
        "sphere: max |τ(∂_u,∂_v)| at 10 points {torsion_worst:.1e}; ρ(∂_u,∂_v,∂_v) against the coordinate oracle {oracle_worst:.1e}; {}",
        profile.join(", ")
    );
    outcome(torsion_worst <= FIELD_TOL && oracle_worst <= FIELD_TOL, detail)
}

fn cyclic_bianchi_criterion() -> Outcome {
    let conn = presets::sphere().connection;
    let mut r = random::rng(SEED);
    let v = BaseSpace::primal(2).unwrap();
    let f: Vec<VectorField> = (0..4).map(|_| random::vector_field(&mut r, v)).collect();
    let points = sphere_points(&mut r, 5);
    let (a, b, c, w) = (&f[0], &f[1], &f[2], &f[3]);
    let cyc = curvature(&conn, a, b, c)
        .unwrap()
        .add(&curvature(&conn, b, c, a).unwrap())
        .unwrap()
        .add(&curvature(&conn, c, a, b).unwrap())
        .unwrap();
    let rho = curvature_extensor(&conn).unwrap();
    let d = |dir: &VectorField, x: &VectorField, y: &VectorField| {
        conn.nabla_extensor(dir, &rho).unwrap().eval_fields(&[x, y, c]).unwrap()
    };
    let bianchi = d(w, a, b).add(&d(a, b, w)).unwrap().add(&d(b, w, a)).unwrap();
    let worst = |x: &VectorField| points.iter().map(|p| x.eval(p).max_abs()).fold(0.0, f64::max);
    let (wc, wb) = (worst(&cyc), worst(&bianchi));
    let detail = format!("sphere at 5 points: cyclic residual {wc:.1e}, Bianchi residual {wb:.1e}");
    outcome(wc <= FIELD_TOL && wb <= FIELD_TOL, detail)
}

fn cli_criterion() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_hca");
    let eval = Command::new(bin).args(["eval", "t1*e1 + e1*t1"]).output().expect("run hca");
    let printed = String::from_utf8_lossy(&eval.stdout).trim().to_string();
    let check = Command::new(bin)
        .args(["check", "--suite", "all", "--dim", "2", "--cases", "100", "--seed", "7"])
        .output()
        .expect("run hca");
    let corpus: Vec<&str> =
        include_str!("data/expressions.txt").lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()).collect();
    let mut broken = Vec::new();
    for line in &corpus {
        let ok = cli::parse(line, 3).is_ok_and(|a| cli::parse(&a.to_string(), 3).is_ok_and(|b| b == a));
        if !ok {
            broken.push(*line);
        }
    }
    let detail = format!(
        "eval printed {printed:?} (exit {:?}); check --suite all --dim 2 exit {:?}; round trip {}/{} expressions{}",
        eval.status.code(),
        check.status.code(),
        corpus.len() - broken.len(),
        corpus.len(),
        if broken.is_empty() { String::new() } else { format!(", broken: {broken:?}") }
    );
    let pass = printed == "2"
        && eval.status.success()
        && check.status.code() == Some(0)
        && broken.is_empty()
        && corpus.len() >= 50;
    outcome(pass, detail)
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("hyperbolic suite", hyperbolic_criterion),
        ("duality suite", duality_criterion),
        ("extensor suite", extensor_criterion),
        ("Clifford map", clifford_map_criterion),
        ("differential suite", differential_criterion),
        ("sphere geometry", geometry_criterion),
        ("cyclic and Bianchi", cyclic_bianchi_criterion),
        ("command line", cli_criterion),
    ];
    let mut all = true;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        all &= o.pass;
        println!("{} criterion {} ({name}): {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
