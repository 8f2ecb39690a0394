//! Seeded property suites. Every identity is checked by exact computation;
//! a run is a pure function of `(suite, max_grade, seed)`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::rational::{big, int};
use crate::algebra::{shuffle, stuffle, words_up_to_grade, NCPoly, Word};
use crate::asymptotics::{
    asym_profile, asym_profile_stepdown, bminus, cminus, cminus_graded, hadamard_limit_check,
    kleene_star_truncated, theta_at_n, theta_coeff,
};
use crate::harmonic::{hsum, hsum_brute, hsum_poly, hsum_via_beta};
use crate::poly::NPoly;
use crate::polylog::{
    chi, eulerian_form_check, li_basis_decompose, li_series_brute, polylog_lij, polylog_op, polylog_poly,
    polylog_rec, taylor_coeffs, u_power_in_li_basis, LaurentU,
};
use crate::special::{
    binomial, build_d, build_dinv, build_m, build_t, build_x, eulerian_row_sum, ext_eulerian, factorial,
    stirling2, stirling2_via_s1, ExtBernoulliFamily,
};
use crate::toplaw::{
    gamma_closed_form, gamma_mnk, kernel_generator, kernel_member, letter_normal_form,
    letter_normal_form_recursive, top, top_poly,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Products,
    Faulhaber,
    PolylogRoutes,
    Character,
    Top,
    Kernel,
    Chi,
    Matrices,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Products,
        Suite::Faulhaber,
        Suite::PolylogRoutes,
        Suite::Character,
        Suite::Top,
        Suite::Kernel,
        Suite::Chi,
        Suite::Matrices,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Products => "products",
            Suite::Faulhaber => "faulhaber",
            Suite::PolylogRoutes => "polylog-routes",
            Suite::Character => "character",
            Suite::Top => "top",
            Suite::Kernel => "kernel",
            Suite::Chi => "chi",
            Suite::Matrices => "matrices",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown suite `{s}` (expected one of products, faulhaber, polylog-routes, \
                     character, top, kernel, chi, matrices, all)"
                )
            })
    }
}

/// Outcome of one identity over all of its test cases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub identity: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// The first few counterexamples.
    pub examples: Vec<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub max_grade: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed()).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {} max-grade {} seed {}",
            self.suite, self.max_grade, self.seed
        )?;
        for c in &self.checks {
            let mark = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{mark} [{}] {} ({} cases)", c.suite, c.identity, c.cases)?;
            for e in &c.examples {
                writeln!(f, "    counterexample: {e}")?;
            }
        }
        write!(f, "{} checks, {} failed", self.checks.len(), self.failed())
    }
}

const KEPT_EXAMPLES: usize = 3;

struct Tally {
    cases: usize,
    failures: usize,
    examples: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            cases: 0,
            failures: 0,
            examples: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < KEPT_EXAMPLES {
                self.examples.push(describe());
            }
        }
    }
}

struct Ctx {
    g: usize,
    rng: ChaCha8Rng,
}

type Body = fn(&mut Ctx, &mut Tally);

/// A word of grade at most `max_grade`, built from a random composition of a
/// random grade.
fn random_word(rng: &mut ChaCha8Rng, max_grade: usize) -> Word {
    let mut left = rng.random_range(0..=max_grade);
    let mut letters = Vec::new();
    while left > 0 {
        let part = rng.random_range(1..=left);
        letters.push(part as u32 - 1);
        left -= part;
    }
    Word::new(letters)
}

fn random_poly(rng: &mut ChaCha8Rng, max_grade: usize, max_terms: usize) -> NCPoly {
    let n = rng.random_range(0..=max_terms);
    (0..n)
        .map(|_| {
            let w = random_word(rng, max_grade);
            (w, int(rng.random_range(-6..=6)))
        })
        .collect()
}

fn pairs(g: usize) -> Vec<(Word, Word)> {
    let words = words_up_to_grade(g);
    let mut out = Vec::new();
    for a in &words {
        for b in words.iter().filter(|b| a.grade() + b.grade() <= g) {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

fn checks_for(suite: Suite) -> Vec<(&'static str, Body)> {
    match suite {
        Suite::Products => vec![
            ("unit laws: w ⧢ 1 = w ⋆ 1 = w", |c, t| {
                for w in words_up_to_grade(c.g) {
                    let one = Word::empty();
                    let wp = NCPoly::from_word(w.clone());
                    t.check(shuffle(&w, &one) == wp && stuffle(&one, &w) == wp, || {
                        w.to_string()
                    });
                }
            }),
            ("⧢ and ⋆ are commutative", |c, t| {
                for (a, b) in pairs(c.g) {
                    t.check(
                        shuffle(&a, &b) == shuffle(&b, &a) && stuffle(&a, &b) == stuffle(&b, &a),
                        || format!("{a}, {b}"),
                    );
                }
            }),
            ("⧢ and ⋆ are associative", |c, t| {
                let g = c.g.min(8);
                for (a, b) in pairs(g) {
                    for d in words_up_to_grade(g - a.grade() - b.grade()) {
                        let da = NCPoly::from_word(a.clone());
                        let dd = NCPoly::from_word(d.clone());
                        let sh =
                            shuffle(&a, &b).bilinear(&dd, shuffle) == da.bilinear(&shuffle(&b, &d), shuffle);
                        let st =
                            stuffle(&a, &b).bilinear(&dd, stuffle) == da.bilinear(&stuffle(&b, &d), stuffle);
                        t.check(sh && st, || format!("{a}, {b}, {d}"));
                    }
                }
            }),
            ("grading, positivity and binomial mass of ⧢ and ⋆", |c, t| {
                for (a, b) in pairs(c.g) {
                    let (wt, len) = (a.weight() + b.weight(), a.len() + b.len());
                    let sh = shuffle(&a, &b);
                    let st = stuffle(&a, &b);
                    let mass: num_bigint::BigInt = sh.terms().map(|(_, c)| c.to_integer()).sum();
                    let ok =
                        sh.terms().all(|(w, c)| {
                            w.weight() == wt && w.len() == len && c.is_integer() && c > &int(0)
                        }) && st.terms().all(|(w, c)| {
                            w.weight() == wt
                                && w.len() <= len
                                && w.len() >= a.len().max(b.len())
                                && c.is_integer()
                                && c > &int(0)
                        }) && mass == binomial(len as u32, a.len() as u32);
                    t.check(ok, || format!("{a}, {b}"));
                }
            }),
            ("stuffle morphism H⁻_u H⁻_v = H⁻_{u⋆v}", |c, t| {
                for (a, b) in pairs(c.g) {
                    t.check(&hsum(&a) * &hsum(&b) == hsum_poly(&stuffle(&a, &b)), || {
                        format!("{a}, {b}")
                    });
                }
            }),
        ],
        Suite::Faulhaber => vec![
            ("H⁻_w agrees with nested sums for N ≤ 12", |c, t| {
                for w in words_up_to_grade(c.g) {
                    let h = hsum(&w);
                    t.check((0..=12).all(|n| h.eval(&big(n)) == hsum_brute(&w, n)), || {
                        w.to_string()
                    });
                }
            }),
            ("deg H⁻_w = (w)+|w| and H⁻_w(0) = 0 for w ≠ 1", |c, t| {
                for w in words_up_to_grade(c.g) {
                    let h = hsum(&w);
                    let ok = h.degree() == Some(w.grade()) && (w.is_empty() || h.eval(&int(0)).is_zero());
                    t.check(ok, || w.to_string());
                }
            }),
            ("Faulhaber matrix rows are H⁻_{y_i}", |c, t| {
                let m = build_m(c.g);
                for i in 0..=c.g {
                    let mut coeffs = vec![int(0)];
                    coeffs.extend_from_slice(m.row(i));
                    t.check(
                        hsum(&Word::letter(i as u32)) == NPoly::from_coeffs(coeffs),
                        || format!("y{i}"),
                    );
                }
            }),
            (
                "H⁻ from extended Bernoulli polynomials, any constants",
                |c, t| {
                    for _ in 0..30 {
                        let fam = ExtBernoulliFamily::random(c.rng.random());
                        let w = random_word(&mut c.rng, c.g);
                        t.check(hsum_via_beta(&w, &fam) == hsum(&w), || {
                            format!("{w} with family seed {:?}", fam.seed())
                        });
                    }
                },
            ),
            (
                "Θ coefficients: N^p = Σ (-1)^{p+j-1} binom(p,j) H⁻_{y_j}(N)",
                |c, t| {
                    for w in words_up_to_grade(c.g) {
                        t.check(theta_at_n(&w) == NPoly::monomial(int(1), w.grade()), || {
                            w.to_string()
                        });
                    }
                },
            ),
        ],
        Suite::PolylogRoutes => vec![
            ("operator route = product recursion", |c, t| {
                for w in words_up_to_grade(c.g) {
                    t.check(polylog_op(&w) == polylog_rec(&w), || w.to_string());
                }
            }),
            ("operator route = l_{i,j} closed form on Y⁺", |c, t| {
                for w in words_up_to_grade(c.g.min(8))
                    .into_iter()
                    .filter(|w| !w.is_empty() && w.is_positive())
                {
                    t.check(polylog_lij(&w).is_ok_and(|f| f == polylog_op(&w)), || {
                        w.to_string()
                    });
                }
            }),
            ("Taylor coefficients are the nested sums", |c, t| {
                for w in words_up_to_grade(c.g.min(8)) {
                    t.check(
                        taylor_coeffs(&polylog_op(&w), 12) == li_series_brute(&w, 12),
                        || w.to_string(),
                    );
                }
            }),
            (
                "Eulerian form Li⁻_w (1-z)^{(w)+|w|} = z^{|w|} A⁻_w",
                |c, t| {
                    for w in words_up_to_grade(c.g) {
                        let ok =
                            eulerian_form_check(&w) && ext_eulerian(&w).degree().unwrap_or(0) <= w.weight();
                        t.check(ok, || w.to_string());
                    }
                },
            ),
            ("letters: Li⁻_{y_i} = u Σ_j j! S₂(i,j) λ^j", |c, t| {
                let x = build_x(c.g.max(1));
                let lambda = LaurentU::from_ints(&[-1, 1]);
                for i in 1..=c.g {
                    let mut rhs = LaurentU::zero();
                    for j in 1..=i {
                        rhs = &rhs + &lambda.pow(j as u32).scale(&x[(i - 1, j - 1)]);
                    }
                    t.check(
                        polylog_op(&Word::letter(i as u32)) == &LaurentU::u() * &rhs,
                        || format!("y{i}"),
                    );
                }
            }),
        ],
        Suite::Character => vec![
            ("C⁻ is a ⧢-character on homogeneous components", |c, t| {
                for (a, b) in pairs(c.g) {
                    let g = a.grade() + b.grade();
                    let ok = cminus_graded(&shuffle(&a, &b), g).is_ok_and(|v| v == cminus(&a) * cminus(&b));
                    t.check(ok, || format!("{a}, {b}"));
                }
            }),
            ("top-graded part of u ⋆ v has C⁻ = C⁻_u C⁻_v", |c, t| {
                for (a, b) in pairs(c.g) {
                    let g = a.grade() + b.grade();
                    let st = stuffle(&a, &b);
                    let ok = cminus_graded(&st.graded_part(g), g).is_ok_and(|v| v == cminus(&a) * cminus(&b))
                        && st.terms().all(|(w, _)| w.grade() <= g);
                    t.check(ok, || format!("{a}, {b}"));
                }
            }),
            (
                "leading coefficients of H⁻_w and Li⁻_w are C⁻_w and B⁻_w",
                |c, t| {
                    for w in words_up_to_grade(c.g) {
                        let b = bminus(&w);
                        t.check(hadamard_limit_check(&w) && b.is_integer() && b > int(0), || {
                            w.to_string()
                        });
                    }
                },
            ),
            ("step-down scan agrees with full expansion", |c, t| {
                for _ in 0..100 {
                    let p = random_poly(&mut c.rng, c.g.min(9), 5);
                    let ok = match (asym_profile(&p), asym_profile_stepdown(&p)) {
                        (Ok(a), Ok(b)) => a == b && a.lead_li == big(factorial(a.degree as u32)) * &a.lead_h,
                        (Err(_), Err(_)) => hsum_poly(&p).is_zero(),
                        _ => false,
                    };
                    t.check(ok, || p.to_string());
                }
            }),
            (
                "Kleene star (Σ_y t^{(y)+1} y)* has coefficients t^{(w)+|w|}",
                |c, t| {
                    for (w, coeff) in kleene_star_truncated(c.g.min(9)) {
                        t.check(coeff == theta_coeff(&w), || w.to_string());
                    }
                },
            ),
        ],
        Suite::Top => vec![
            (
                "Li⁻_{P⊤Q} = Li⁻_P Li⁻_Q and P⊤Q is never a nonzero kernel element",
                |c, t| {
                    for _ in 0..200 {
                        let p = random_poly(&mut c.rng, c.g, 3);
                        let q = random_poly(&mut c.rng, c.g, 3);
                        let pq = top_poly(&p, &q);
                        let ok = polylog_poly(&pq) == &polylog_poly(&p) * &polylog_poly(&q)
                            && (pq.is_zero() || !kernel_member(&pq));
                        t.check(ok, || format!("({p}) ⊤ ({q})"));
                    }
                },
            ),
            ("⟨u⊤v, 1⟩ ≠ 0 iff u = v = 1", |c, t| {
                for (a, b) in pairs(c.g) {
                    let ok = top(&a, &b).constant.is_zero() != (a.is_empty() && b.is_empty());
                    t.check(ok, || format!("{a}, {b}"));
                }
            }),
            ("y₀u ⊤ v = u ⊤ y₀v = y₀ ⊤ (u ⊤ v)", |c, t| {
                for (a, b) in pairs(c.g.saturating_sub(1)) {
                    let lhs = top(&a.prepend(0), &b).to_ncpoly();
                    let ok = lhs == top(&a, &b.prepend(0)).to_ncpoly()
                        && lhs == top_poly(&NCPoly::from_word(Word::letter(0)), &top(&a, &b).to_ncpoly());
                    t.check(ok, || format!("{a}, {b}"));
                }
            }),
            ("⊤ is commutative and associative", |c, t| {
                for _ in 0..50 {
                    let g = c.g.min(6);
                    let [a, b, d] = [0; 3].map(|_| random_poly(&mut c.rng, g, 2));
                    let ok = top_poly(&a, &b) == top_poly(&b, &a)
                        && top_poly(&top_poly(&a, &b), &d) == top_poly(&a, &top_poly(&b, &d));
                    t.check(ok, || format!("{a}; {b}; {d}"));
                }
            }),
            ("B⁻_P B⁻_Q = B⁻_{P⊤Q}", |c, t| {
                for _ in 0..100 {
                    let p = random_poly(&mut c.rng, c.g, 3);
                    let q = random_poly(&mut c.rng, c.g, 3);
                    let (Ok(a), Ok(b)) = (asym_profile(&p), asym_profile(&q)) else {
                        continue;
                    };
                    let ok = asym_profile(&top_poly(&p, &q)).is_ok_and(|r| {
                        r.degree == a.degree + b.degree && r.lead_li == &a.lead_li * &b.lead_li
                    });
                    t.check(ok, || format!("({p}) ⊤ ({q})"));
                }
            }),
            ("γ_{m,n,k} closed form and y_m ⊤ y_n assembly", |c, t| {
                for m in 1..c.g.max(1) as u32 {
                    for n in 1..=(c.g as u32).saturating_sub(m) {
                        let ok = (2..=(m + n + 2) as i64)
                            .all(|k| gamma_closed_form(m, n, k) == gamma_mnk(m, n, k))
                            && crate::toplaw::top_from_gamma(m, n, gamma_closed_form)
                                == top(&Word::letter(m), &Word::letter(n)).to_ncpoly();
                        t.check(ok, || format!("m = {m}, n = {n}"));
                    }
                }
            }),
        ],
        Suite::Kernel => vec![
            ("w - w⊤1 lies in ker Li⁻ and ker H⁻", |c, t| {
                for w in words_up_to_grade(c.g) {
                    let k = kernel_generator(&w);
                    t.check(kernel_member(&k) && hsum_poly(&k).is_zero(), || w.to_string());
                }
            }),
            ("w⊤1 by the binomial recursion", |c, t| {
                for w in words_up_to_grade(c.g) {
                    t.check(letter_normal_form(&w) == letter_normal_form_recursive(&w), || {
                        w.to_string()
                    });
                }
            }),
            ("ker H⁻ = ker Li⁻ on random elements", |c, t| {
                for _ in 0..200 {
                    let mut p = random_poly(&mut c.rng, c.g, 3);
                    if c.rng.random_bool(0.5) {
                        for _ in 0..c.rng.random_range(1..=3) {
                            let w = random_word(&mut c.rng, c.g);
                            p = &p + &kernel_generator(&w).scale(&int(c.rng.random_range(-4..=4)));
                        }
                    }
                    t.check(kernel_member(&p) == hsum_poly(&p).is_zero(), || p.to_string());
                }
            }),
        ],
        Suite::Chi => vec![
            ("χ(H⁻_w) = Li⁻_w", |c, t| {
                for w in words_up_to_grade(c.g) {
                    t.check(chi(&hsum(&w)) == polylog_op(&w), || w.to_string());
                }
            }),
            (
                "u^k = u + Σ_{j=2}^{k} S₁(k,j)/(k-1)! Li⁻_{y_{j-1}}",
                |c, t| {
                    let tm = build_t(c.g.max(1));
                    for k in 1..=c.g {
                        let coeffs = u_power_in_li_basis(k as u32);
                        let mut f = LaurentU::u().scale(&coeffs[0]);
                        for (j, cj) in coeffs.iter().enumerate().skip(1) {
                            f = &f + &polylog_op(&Word::letter(j as u32)).scale(cj);
                        }
                        let ok =
                            f == LaurentU::monomial(int(1), k as i64) && tm.row(k - 1)[..k] == coeffs[..];
                        t.check(ok, || format!("k = {k}"));
                    }
                },
            ),
            ("letter-basis decomposition reconstructs products", |c, t| {
                for (a, b) in pairs(c.g) {
                    let f = &polylog_op(&a) * &polylog_op(&b);
                    t.check(li_basis_decompose(&f).is_ok_and(|e| e.to_laurent() == f), || {
                        format!("{a}, {b}")
                    });
                }
            }),
        ],
        Suite::Matrices => vec![
            ("D(w) D⁻¹(w) = I for random constants", |c, t| {
                for _ in 0..50 {
                    let len = c.rng.random_range(1..=4);
                    let w = Word::new((0..len).map(|_| c.rng.random_range(1..=5)).collect::<Vec<u32>>());
                    let fam = ExtBernoulliFamily::random(c.rng.random());
                    let ok = match (build_d(&w, &fam), build_dinv(&w, &fam)) {
                        (Ok(d), Ok(v)) => (&d * &v).is_identity() && (&v * &d).is_identity(),
                        _ => false,
                    };
                    t.check(ok, || format!("{w} with family seed {:?}", fam.seed()));
                }
            }),
            ("S₂ from alternating chains of S₁", |c, t| {
                for i in 1..=c.g.max(1) as u32 {
                    for j in 1..=i {
                        t.check(stirling2_via_s1(i, j) == big(stirling2(i, j)), || {
                            format!("({i}, {j})")
                        });
                    }
                }
            }),
            ("Σ_k A_{n,k} = n!", |c, t| {
                for n in 1..=c.g.max(1) as u32 {
                    t.check(eulerian_row_sum(n) == factorial(n), || format!("n = {n}"));
                }
            }),
            ("X rows: j! S₂(i,j)", |c, t| {
                let x = build_x(c.g.max(1));
                for i in 1..=c.g.max(1) {
                    let row_sum: crate::Rational = x.row(i - 1).iter().sum();
                    let fubini: num_bigint::BigInt = (1..=i as u32)
                        .map(|j| factorial(j) * stirling2(i as u32, j))
                        .sum();
                    t.check(
                        row_sum == big(fubini)
                            && !x[(i - 1, 0)].is_zero()
                            && x[(i - 1, i - 1)] == big(factorial(i as u32)),
                        || format!("row {i}"),
                    );
                }
            }),
            ("M(0,0) = 1 and M(1,0) = 1/2", |c, t| {
                let m = build_m(c.g.max(1));
                t.check(
                    m[(0, 0)].is_one() && m[(1, 0)] == crate::algebra::rational::rat(1, 2),
                    || "M".into(),
                );
            }),
        ],
        Suite::All => Suite::EACH.into_iter().flat_map(checks_for).collect(),
    }
}

fn suite_of(identity: &str) -> &'static str {
    Suite::EACH
        .into_iter()
        .find(|s| checks_for(*s).iter().any(|(name, _)| *name == identity))
        .map_or("all", Suite::name)
}

/// A stable 64-bit hash (FNV-1a), so per-check seeds do not depend on the
/// standard library's randomised hasher.
fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

/// Runs every check of `suite` on words of grade at most `max_grade`. Checks
/// run in parallel; the report keeps their declaration order.
pub fn run(suite: Suite, max_grade: usize, seed: u64) -> Report {
    let checks = checks_for(suite)
        .into_par_iter()
        .map(|(identity, body)| {
            let mut ctx = Ctx {
                g: max_grade,
                rng: ChaCha8Rng::seed_from_u64(seed ^ fnv1a(identity)),
            };
            let mut tally = Tally::new();
            body(&mut ctx, &mut tally);
            Check {
                suite: suite_of(identity),
                identity,
                cases: tally.cases,
                failures: tally.failures,
                examples: tally.examples,
            }
        })
        .collect();
    Report {
        suite,
        max_grade,
        seed,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn every_suite_passes_at_small_grade() {
        let r = run(Suite::All, 5, 1);
        assert!(r.passed(), "{r}");
        assert_eq!(
            r.checks.len(),
            Suite::EACH.iter().map(|s| checks_for(*s).len()).sum::<usize>()
        );
        assert!(r.checks.iter().all(|c| c.suite != "all"));
    }

    #[test]
    fn grade_zero_is_trivial() {
        let r = run(Suite::Products, 0, 0);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn runs_are_reproducible() {
        let a = run(Suite::Kernel, 5, 42).to_string();
        let b = run(Suite::Kernel, 5, 42).to_string();
        assert_eq!(a, b);
    }

    #[test]
    fn random_words_respect_the_grade() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            assert!(random_word(&mut rng, 7).grade() <= 7);
        }
    }
}
