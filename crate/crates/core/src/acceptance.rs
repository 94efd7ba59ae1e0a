//! End-to-end checks of the whole library, one per numbered criterion. Each
//! check is deterministic for a given seed.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::ak::{
    ak_tile, balanced, check_window_constraints, enumerate_tileset, orbit_configuration, orbit_for_s0,
    weak_period_check, window_constraints, Strategy,
};
use crate::bsnn::{
    canonicalize_bsnn, coset, normality_witnesses, phi_inverse, phi_iso, rebuild, residually_finite, FreeWord,
    ZxFn,
};
use crate::dynamics::{
    circle_distance, f_quotient, iterate, periodic_point_search, phi_circle, rotation_angle, rotation_residual,
    CirclePoint, MultSystem, QuotientPoint,
};
use crate::error::{Error, Result};
use crate::group::{
    alpha, ball, canonical_form, equals, height, parse_word, quasi_normal_form_1n, GroupParams, GroupWord,
    QuasiNormalForm, Syllable,
};
use crate::rational::{abs, format, int, ratio, Rational};
use crate::sigma::{b_periodicity_check, explicit_patch, explicit_tile_qnf, periodicity_counterexample, tau_sigma};
use crate::subst::{
    fixpoint2_windows, fixpoint_complexity, fixpoint_window, is_k_periodic, sigma, FixpointSeed, Letter,
    PointedWord,
};
use crate::wang::{multiplies_residual, verify_patch};

pub const CRITERIA: [(u8, &str); 10] = [
    (1, "multiplying tilesets"),
    (2, "orbit configurations"),
    (3, "weak period"),
    (4, "tile identities"),
    (5, "dynamics of S0"),
    (6, "substitutions"),
    (7, "substitution tileset"),
    (8, "BS(n,n) subgroup"),
    (9, "group normal forms"),
    (10, "balanced representation"),
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl std::fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] criterion {:>2} {}: {} ({:.2}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.seconds
        )
    }
}

/// Pass/fail with a one-line explanation.
type Outcome = Result<(bool, String)>;

/// Runs one criterion. Unknown ids are a parameter error.
pub fn run_criterion(id: u8, seed: u64) -> Result<CriterionReport> {
    let name = CRITERIA
        .iter()
        .find(|(i, _)| *i == id)
        .map(|(_, n)| n.to_string())
        .ok_or_else(|| Error::param(format!("no criterion {id}; valid ids are 1..=10")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(id as u64));
    let start = Instant::now();
    let outcome = match id {
        1 => multiplying_tilesets(),
        2 => orbit_configurations(&mut rng),
        3 => weak_period(),
        4 => tile_identities(&mut rng),
        5 => dynamics(&mut rng),
        6 => substitutions(&mut rng),
        7 => substitution_tileset(&mut rng),
        8 => bsnn_subgroup(&mut rng),
        9 => group_forms(&mut rng),
        _ => balanced_representation(&mut rng),
    };
    let elapsed = start.elapsed();
    let (passed, mut detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    let budget = time_budget(id);
    let passed = passed && elapsed <= budget;
    if elapsed > budget {
        detail = format!("{detail}; over the {}s budget", budget.as_secs());
    }
    Ok(CriterionReport {
        id,
        name,
        passed,
        detail,
        seconds: elapsed.as_secs_f64(),
    })
}

pub fn run_all(seed: u64) -> Vec<CriterionReport> {
    CRITERIA
        .iter()
        .map(|(id, _)| run_criterion(*id, seed).expect("known id"))
        .collect()
}

fn time_budget(id: u8) -> Duration {
    match id {
        1 => Duration::from_secs(60),
        2 => Duration::from_secs(300),
        _ => Duration::from_secs(600),
    }
}

fn p23() -> GroupParams {
    GroupParams::new(2, 3).expect("valid")
}

/// A random word of `len` letters over `a^{±1}`, `b^{±1}`.
pub fn random_word(rng: &mut impl Rng, len: usize) -> GroupWord {
    GroupWord::from_syllables((0..len).map(|_| match rng.gen_range(0..4) {
        0 => Syllable::a(1),
        1 => Syllable::a(-1),
        2 => Syllable::B(1),
        _ => Syllable::B(-1),
    }))
}

/// A random rational in `[lo, hi]` with denominator at most `max_den`.
pub fn random_rational(rng: &mut impl Rng, lo: &Rational, hi: &Rational, max_den: i64) -> Rational {
    let d = rng.gen_range(1..=max_den);
    let lo_num = (lo * int(d)).ceil().to_integer();
    let hi_num = (hi * int(d)).floor().to_integer();
    if lo_num > hi_num {
        return lo.clone();
    }
    let span: i64 = (&hi_num - &lo_num).try_into().unwrap_or(i64::MAX);
    Rational::new(lo_num + BigInt::from(rng.gen_range(0..=span)), BigInt::from(d))
}

fn multiplying_tilesets() -> Outcome {
    let p = p23();
    let mut parts = Vec::new();
    let mut ok = true;
    for piece in MultSystem::s0().pieces() {
        let e = enumerate_tileset(p, piece, &Strategy::default())?;
        let mut bad = 0;
        for t in e.tileset.tiles() {
            if !multiplies_residual(t, piece.slope())?.is_zero() {
                bad += 1;
            }
        }
        ok &= bad == 0 && !e.tileset.is_empty();
        parts.push(format!(
            "q = {} on [{}, {}]: {} tiles, {} nonzero residuals",
            format(piece.slope()),
            format(&piece.lo()),
            format(&piece.hi()),
            e.tileset.len(),
            bad
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn orbit_configurations(rng: &mut impl Rng) -> Outcome {
    let p = p23();
    let system = MultSystem::s0();
    let constraints = window_constraints(&system);
    let (lo, hi) = (ratio(1, 3), int(2));
    let mut starts = BTreeSet::new();
    while starts.len() < 20 {
        starts.insert(random_rational(rng, &lo, &hi, 60));
    }
    let mut cells = 0;
    for x0 in &starts {
        let branch = orbit_for_s0(x0, 5)?;
        let x = orbit_configuration(&system, &branch, p, 5)?;
        cells += x.len();
        let violations = verify_patch(&x);
        if !violations.is_empty() {
            return Ok((false, format!("x0 = {}: {} adjacency violations", format(x0), violations.len())));
        }
        let failures = check_window_constraints(&x, &constraints)?;
        if !failures.is_empty() {
            return Ok((false, format!("x0 = {}: {} window failures", format(x0), failures.len())));
        }
    }
    Ok((true, format!("{} starting points, {} cells checked", starts.len(), cells)))
}

fn weak_period() -> Outcome {
    let p = p23();
    let period = parse_word("baBabABA")?;
    let g = canonical_form(&period, p);
    if g.is_identity() {
        return Ok((false, "period reduces to the identity".into()));
    }
    let a = alpha(&period, p);
    if !a.is_zero() {
        return Ok((false, format!("alpha(period) = {}", format(&a))));
    }
    let system = MultSystem::s0();
    let starts = [ratio(1, 2), ratio(1, 3), int(1), ratio(7, 5), int(2)];
    for x0 in &starts {
        let branch = orbit_for_s0(x0, 4)?;
        if !weak_period_check(&system, &branch, p, &period, 4)? {
            return Ok((false, format!("tile moved by the period at x0 = {}", format(x0))));
        }
    }
    Ok((
        true,
        format!("period {g} is nontrivial, alpha = 0, invariant on radius 4 for {} orbits", starts.len()),
    ))
}

fn tile_identities(rng: &mut impl Rng) -> Outcome {
    let p = p23();
    let (m, n) = (p.m(), p.n());
    let slopes = [int(2), ratio(1, 3), ratio(3, 2), ratio(-2, 5)];
    let (lo, hi) = (ratio(-3, 1), int(3));
    let mut checks = 0u64;
    for trial in 0..10_000 {
        let len = rng.gen_range(0..12);
        let g = random_word(rng, len);
        let x = random_rational(rng, &lo, &hi, 40);
        let q = &slopes[trial % slopes.len()];
        let here = ak_tile(p, q, &g, &x);
        let right = ak_tile(p, q, &g.concat(&GroupWord::a(m)), &x);
        if right.left != here.right {
            return Ok((false, format!("horizontal identity fails at g = {g}, x = {}", format(&x))));
        }
        checks += 1;
        if x.is_zero() {
            continue;
        }
        let up_x = &x / q;
        for j in 1..=m {
            for l in 1..=n {
                let up = g.concat(&GroupWord::a(j - l)).concat(&GroupWord::b(1));
                let above = ak_tile(p, q, &up, &up_x);
                if above.bottom[(l - 1) as usize] != here.top[(j - 1) as usize] {
                    return Ok((
                        false,
                        format!("vertical identity fails at g = {g}, x = {}, j = {j}, l = {l}", format(&x)),
                    ));
                }
                checks += 1;
            }
        }
    }
    Ok((true, format!("{checks} exact identities, 0 failures")))
}

/// `S^k(x)` by trying every sequence of pieces.
fn iterate_oracle(s: &MultSystem, x: &Rational, k: i64) -> BTreeSet<Rational> {
    let steps = k.unsigned_abs() as u32;
    let count = s.len().pow(steps);
    let mut out = BTreeSet::new();
    'paths: for mut code in 0..count {
        let mut y = x.clone();
        for _ in 0..steps {
            let piece = &s.pieces()[code % s.len()];
            code /= s.len();
            let next = if k > 0 {
                piece.contains(&y).then(|| &y * piece.slope())
            } else {
                let z = &y / piece.slope();
                piece.contains(&z).then_some(z)
            };
            match next {
                Some(z) => y = z,
                None => continue 'paths,
            }
        }
        out.insert(y);
    }
    out
}

fn dynamics(rng: &mut impl Rng) -> Outcome {
    let s = MultSystem::s0();
    let periodic = periodic_point_search(&s, 200, 12)?;
    if !periodic.is_empty() {
        let (x, k) = &periodic[0];
        return Ok((false, format!("periodic point {} with period {k}", format(x))));
    }
    let (lo, hi) = (int(0), int(3));
    for _ in 0..100 {
        let x = random_rational(rng, &lo, &hi, 30);
        for k in -6..=6 {
            if iterate(&s, &x, k)? != iterate_oracle(&s, &x, k) {
                return Ok((false, format!("iterate disagrees at x = {}, k = {k}", format(&x))));
            }
        }
    }
    let grid = rotation_residual(10_000);
    let theta = rotation_angle();
    let mut sampled: f64 = 0.0;
    for _ in 0..10_000 {
        let x = random_rational(rng, &ratio(1, 3), &int(2), 1_000_000);
        let p = QuotientPoint::new(x)?;
        let expected = CirclePoint((phi_circle(&p).0 + theta).rem_euclid(1.0));
        sampled = sampled.max(circle_distance(phi_circle(&f_quotient(&p)), expected));
    }
    let worst = grid.max(sampled);
    Ok((
        worst < 1e-9,
        format!("no periodic points (den <= 200, k <= 12); iterate matches oracle on 100 points; rotation residual {worst:.3e}"),
    ))
}

fn random_pointed(rng: &mut impl Rng, half: usize) -> PointedWord {
    let mut draw = || (0..half).map(|_| rng.gen_range(0..2u8)).collect::<Vec<Letter>>();
    let left = draw();
    let right = draw();
    PointedWord { left, right }
}

fn substitutions(rng: &mut impl Rng) -> Outcome {
    // shift identities
    for trial in 0..100 {
        let n = 2 + trial % 5;
        let r = rng.gen_range(0..n);
        let s = sigma(n, r)?;
        let s0 = sigma(n, 0)?;
        let u = random_pointed(rng, 25);
        let image = s.apply_pointed(&u);
        for j in -20..=20i64 {
            let shifted = s.apply_pointed(&u.shift(j)?);
            let letter = s.image(u.get(j).expect("inside window"));
            for (i, &c) in letter.iter().enumerate() {
                let expect = image.get(n as i64 * j + i as i64);
                if shifted.get(i as i64) != expect || Some(c) != expect {
                    return Ok((false, format!("shift identity fails for n = {n}, r = {r}, j = {j}, i = {i}")));
                }
            }
        }
        let plain = s0.apply_pointed(&u);
        for pos in image.start()..image.end() - r as i64 {
            if image.get(pos) != plain.get(pos + r as i64) {
                return Ok((false, format!("sigma_{r} differs from a shifted sigma_0 for n = {n}")));
            }
        }
    }
    // fixpoint of sigma_1, n = 3
    let w = fixpoint_window(3, 3usize.pow(7))?;
    let s31 = sigma(3, 1)?;
    if !s31.apply_pointed(&w).agrees_with(&w) {
        return Ok((false, "the n = 3 window is not sigma_1 invariant".into()));
    }
    // n = 2 pair
    let (u, v) = fixpoint2_windows(1 << 10);
    let s21 = sigma(2, 1)?;
    let s2 = s21.power(2);
    let pair_ok = s2.apply_pointed(&u).agrees_with(&u)
        && s2.apply_pointed(&v).agrees_with(&v)
        && s21.apply_pointed(&u).agrees_with(&v)
        && s21.apply_pointed(&v).agrees_with(&u)
        && u.get(0) != v.get(0);
    if !pair_ok {
        return Ok((false, "the n = 2 pair is not a swapped sigma_1^2 fixpoint pair".into()));
    }
    let (profile, _) = fixpoint_complexity(&s31, FixpointSeed { left: 0, right: 0 }, 25, 16)?;
    if let Some(k) = (1..=25).find(|&k| profile.get(k).unwrap_or(0) < k + 1) {
        return Ok((false, format!("P({k}) = {} < {}", profile.get(k).unwrap_or(0), k + 1)));
    }
    for k in 1..=50 {
        if is_k_periodic(&w, k)? {
            return Ok((false, format!("fixpoint window is {k}-periodic")));
        }
    }
    Ok((
        true,
        format!(
            "shift identities on 100 windows; fixpoints invariant; P(25) = {}; no period <= 50",
            profile.get(25).unwrap_or(0)
        ),
    ))
}

fn substitution_tileset(rng: &mut impl Rng) -> Outcome {
    for n in 2..=6 {
        let t = tau_sigma(n)?;
        if t.len() != 2 * n {
            return Ok((false, format!("tau_sigma({n}) has {} tiles", t.len())));
        }
    }
    let b = GroupWord::b(1);
    for n in 3..=5 {
        let x = explicit_patch(n, 5)?;
        let v = verify_patch(&x);
        if !v.is_empty() {
            return Ok((false, format!("n = {n}: {} violations on {} cells", v.len(), x.len())));
        }
        if !b_periodicity_check(n, &b, 4)? {
            return Ok((false, format!("n = {n}: not b-invariant")));
        }
    }
    let x2 = explicit_patch(2, 5)?;
    if !verify_patch(&x2).is_empty() {
        return Ok((false, "n = 2 patch has violations".into()));
    }
    if !b_periodicity_check(2, &GroupWord::b(2), 4)? {
        return Ok((false, "n = 2 patch is not b^2-invariant".into()));
    }
    let witness = match periodicity_counterexample(2, &b, 4)? {
        Some(g) => g,
        None => return Ok((false, "n = 2 patch is unexpectedly b-invariant".into())),
    };
    let mut pairs = 0;
    for trial in 0..10_000 {
        let n = 2 + trial % 4;
        let g = QuasiNormalForm::new(rng.gen_range(0..6), rng.gen_range(-200..=200i64), rng.gen_range(0..6));
        let big = g.inflate(n as i64, rng.gen_range(1..4));
        if explicit_tile_qnf(n, &g)? != explicit_tile_qnf(n, &big)? {
            return Ok((false, format!("tile depends on the representative for n = {n}")));
        }
        pairs += 1;
    }
    Ok((
        true,
        format!("2n tiles; valid radius-5 patches for n = 3..5; b-invariant; n = 2 b^2-invariant, b moves {witness}; {pairs} equivalent forms agree"),
    ))
}

fn random_zxfn(rng: &mut impl Rng, n: usize) -> ZxFn {
    let mut w = FreeWord::identity();
    for _ in 0..rng.gen_range(0..8) {
        w.push(rng.gen_range(0..n), if rng.gen_bool(0.5) { 1 } else { -1 });
    }
    ZxFn::new(rng.gen_range(-20..=20i64), w)
}

/// Residual finiteness of BS(m,n), listed by hand.
const RESIDUALLY_FINITE_TABLE: [(i64, i64, bool); 20] = [
    (1, 1, true),
    (1, 2, true),
    (2, 1, true),
    (1, 7, true),
    (-1, 5, true),
    (3, -1, true),
    (2, 2, true),
    (3, 3, true),
    (5, 5, true),
    (-2, 2, true),
    (4, -4, true),
    (-3, -3, true),
    (2, 3, false),
    (3, 2, false),
    (2, 4, false),
    (3, 5, false),
    (4, 6, false),
    (2, -3, false),
    (-6, 4, false),
    (3, 4, false),
];

fn bsnn_subgroup(rng: &mut impl Rng) -> Outcome {
    let mut checks = 0;
    for n in 2..=4usize {
        let p = GroupParams::new(n as i64, n as i64)?;
        for _ in 0..10_000 {
            let (z1, z2) = (random_zxfn(rng, n), random_zxfn(rng, n));
            let prod = phi_iso(&z1.mul(&z2), n)?;
            let split = phi_iso(&z1, n)?.concat(&phi_iso(&z2, n)?);
            if !equals(&prod, &split, p) {
                return Ok((false, format!("phi is not multiplicative on BS({n},{n})")));
            }
            if phi_inverse(&prod, n)? != z1.mul(&z2) {
                return Ok((false, format!("phi does not round trip on BS({n},{n})")));
            }
            let len = rng.gen_range(0..14);
            let w = random_word(rng, len);
            if !equals(&rebuild(&canonicalize_bsnn(&w, n)?, n)?, &w, p) {
                return Ok((false, format!("canonical form of {w} changes the element")));
            }
            checks += 1;
        }
        if let Some(bad) = normality_witnesses(n)?.iter().find(|w| !w.in_subgroup) {
            return Ok((false, format!("{} conjugated by {} leaves H", bad.generator, bad.conjugator)));
        }
        let cosets: BTreeSet<usize> = ball(p, 4)?
            .iter()
            .map(|g| coset(&g.to_word(), n))
            .collect::<Result<_>>()?;
        if cosets.len() != n {
            return Ok((false, format!("{} cosets on the radius-4 ball of BS({n},{n})", cosets.len())));
        }
    }
    for (m, n, expect) in RESIDUALLY_FINITE_TABLE {
        if residually_finite(m, n)? != expect {
            return Ok((false, format!("residual finiteness wrong for BS({m},{n})")));
        }
    }
    Ok((true, format!("{checks} random pairs; normality and coset counts hold; 20 residual-finiteness cases agree")))
}

fn group_forms(rng: &mut impl Rng) -> Outcome {
    let mut changed = 0;
    for (m, n) in [(2, 3), (1, 2)] {
        let p = GroupParams::new(m, n)?;
        let r = p.relator();
        for _ in 0..10_000 {
            let len = rng.gen_range(0..12);
            let w = random_word(rng, len);
            let before = canonical_form(&w, p);
            let mut v = w.clone();
            for _ in 0..rng.gen_range(1..4) {
                let clen = rng.gen_range(0..4);
                let c = random_word(rng, clen);
                let rel = if rng.gen_bool(0.5) { r.clone() } else { r.inverse() };
                let insert = c.concat(&rel).concat(&c.inverse());
                let at = rng.gen_range(0..=v.letters().len());
                v = v.insert_at(at, &insert);
            }
            if canonical_form(&v, p) != before {
                changed += 1;
            }
        }
    }
    if changed > 0 {
        return Ok((false, format!("{changed} relator insertions changed the canonical form")));
    }
    for n in [2i64, 3] {
        let p = GroupParams::new(1, n)?;
        for _ in 0..2_000 {
            let len = rng.gen_range(0..12);
            let w = random_word(rng, len);
            let q = quasi_normal_form_1n(&w, n)?;
            if !equals(&q.to_word(), &w, p) || q.height() != height(&w) {
                return Ok((false, format!("quasi-normal form of {w} is wrong in BS(1,{n})")));
            }
        }
    }
    Ok((true, "2 x 10^4 relator insertions, 4000 quasi-normal forms".into()))
}

fn balanced_representation(rng: &mut impl Rng) -> Outcome {
    let mut cases = 0;
    for _ in 0..200 {
        let x = random_rational(rng, &int(-4), &int(4), 50);
        let z = random_rational(rng, &int(-30), &int(30), 50);
        let top = rng.gen_range(1..=1000i64);
        let mut sum = BigInt::zero();
        for big_n in 1..=top {
            sum += balanced(&x, &z, big_n);
            let average = Rational::new(sum.clone(), BigInt::from(big_n));
            if abs(&(average - &x)) > Rational::new(BigInt::one(), BigInt::from(big_n)) {
                return Ok((
                    false,
                    format!("N = {big_n}, x = {}, z = {}", format(&x), format(&z)),
                ));
            }
            cases += 1;
        }
    }
    Ok((true, format!("{cases} (x, z, N) cases within 1/N")))
}
