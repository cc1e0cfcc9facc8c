//! RF-chain selection by Dinkelbach iterations on the two-ratio
//! approximated objective, with an exhaustive oracle and rounding helper.
//!
//! The subproblem at fixed `κ` is linear and separable in the selection
//! diagonals, so it is solved in closed form: chain `k` is switched on iff
//! its weight `ρ(c[k] − κ g[k])` is strictly positive.

use crate::error::{JrcError, Result};
use crate::model::Selection;
use crate::rates::{approx_weighted_objective, guarded_ratio, LinearCoefficients};
use crate::scalar::Real;

/// Largest `n_rf` accepted by [`brute_force_select`].
pub const MAX_ENUMERATION_CHAINS: usize = 16;

/// Relative slack an auxiliary value must clear before a candidate
/// selection replaces the current one.
const ACCEPT_RTOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DinkelbachOptions {
    pub i_max: usize,
    /// Relative `κ` change below which both operations count as converged.
    pub kappa_tol: f64,
    /// Upper bound on active chains per operation.
    pub max_active: Option<usize>,
}

impl Default for DinkelbachOptions {
    fn default() -> Self {
        Self {
            i_max: 20,
            kappa_tol: 1e-6,
            max_active: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelectionResult<T> {
    pub s_com: Selection,
    pub s_rad: Selection,
    /// `κ^com` per iteration, starting with the initial value 1.
    pub kappa_com_trajectory: Vec<T>,
    pub kappa_rad_trajectory: Vec<T>,
    /// Subproblem solves performed.
    pub iterations: usize,
    /// Whether the `κ` stopping rule fired before `i_max`.
    pub converged: bool,
    /// Approximated weighted objective at the final selections.
    pub objective: T,
    /// Set when some evaluated ratio had a denominator below the ε floor.
    pub denominator_guarded: bool,
}

/// Relaxed subproblem solution, one entry per chain in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct RelaxedSelection<T> {
    pub s_com: Vec<T>,
    pub s_rad: Vec<T>,
}

/// Exhaustive search output.
#[derive(Debug, Clone, PartialEq)]
pub struct BruteForceResult<T> {
    pub s_com: Selection,
    pub s_rad: Selection,
    pub objective: T,
}

/// One ratio of the objective: numerator coefficients, denominator
/// coefficients, denominator offset and the operation weight.
struct Ratio<'a, T> {
    num: &'a [T],
    den: &'a [T],
    noise: T,
    weight: T,
}

impl<T: Real> Ratio<'_, T> {
    fn com(coeffs: &LinearCoefficients<T>, rho: T) -> Ratio<'_, T> {
        Ratio {
            num: &coeffs.c_com,
            den: &coeffs.g_com,
            noise: coeffs.noise_com,
            weight: rho,
        }
    }

    fn rad(coeffs: &LinearCoefficients<T>, rho: T) -> Ratio<'_, T> {
        Ratio {
            num: &coeffs.c_rad,
            den: &coeffs.g_rad,
            noise: coeffs.noise_rad,
            weight: T::one() - rho,
        }
    }

    fn denominator(&self, s: &Selection) -> T {
        s.dot(self.den) + self.noise
    }

    fn value(&self, s: &Selection) -> T {
        guarded_ratio(s.dot(self.num), self.denominator(s))
    }

    fn is_guarded(&self, s: &Selection) -> bool {
        self.denominator(s) < T::denominator_guard() && s.dot(self.num) > T::zero()
    }

    fn weights(&self, kappa: T) -> Vec<T> {
        self.num
            .iter()
            .zip(self.den)
            .map(|(&c, &g)| self.weight * (c - kappa * g))
            .collect()
    }

    /// `δ(s) − κ σ(s)` and the scale it is compared against.
    fn auxiliary(&self, s: &Selection, kappa: T) -> (T, T) {
        let num = s.dot(self.num);
        let den = self.denominator(s);
        (num - kappa * den, num.abs() + (kappa * den).abs())
    }
}

/// Vertex maximizing `Σ_k w[k] s[k]` over `{0,1}^n`, optionally with at most
/// `cap` ones. Zero weights stay off; among equal weights the lower index
/// wins a capped slot.
fn vertex<T: Real>(weights: &[T], cap: Option<usize>) -> Selection {
    let mut positive: Vec<usize> = (0..weights.len())
        .filter(|&k| weights[k] > T::zero())
        .collect();
    if let Some(l) = cap {
        positive.sort_by(|&a, &b| weights[b].partial_cmp(&weights[a]).unwrap().then(a.cmp(&b)));
        positive.truncate(l);
    }
    Selection::from_indices(weights.len(), &positive)
}

fn check_rho<T: Real>(rho: T) -> Result<()> {
    if rho >= T::zero() && rho <= T::one() {
        Ok(())
    } else {
        Err(JrcError::RhoOutOfRange(rho.to_f64().unwrap_or(f64::NAN)))
    }
}

fn check_cap(cap: Option<usize>, n_rf: usize) -> Result<()> {
    match cap {
        Some(l) if l == 0 || l > n_rf => Err(JrcError::RfCountOutOfRange { count: l, n_rf }),
        _ => Ok(()),
    }
}

/// Closed-form solution of the relaxed linear subproblem at fixed `κ`.
pub fn solve_db_subproblem<T: Real>(
    coeffs: &LinearCoefficients<T>,
    kappa_com: T,
    kappa_rad: T,
    rho: T,
    max_active: Option<usize>,
) -> Result<RelaxedSelection<T>> {
    coeffs.validate()?;
    check_rho(rho)?;
    check_cap(max_active, coeffs.n_rf())?;
    if !(kappa_com.is_finite() && kappa_rad.is_finite()) {
        return Err(JrcError::InvalidConfig {
            field: "kappa",
            reason: "must be finite".into(),
        });
    }
    let com = vertex(&Ratio::com(coeffs, rho).weights(kappa_com), max_active);
    let rad = vertex(&Ratio::rad(coeffs, rho).weights(kappa_rad), max_active);
    Ok(RelaxedSelection {
        s_com: com.to_real(),
        s_rad: rad.to_real(),
    })
}

/// Thresholds relaxed diagonals at 0.5; exactly 0.5 rounds down.
pub fn round_selection<T: Real>(relaxed: &[T]) -> Result<Selection> {
    let half = T::lit(0.5);
    relaxed
        .iter()
        .enumerate()
        .map(|(index, &v)| {
            if v >= T::zero() && v <= T::one() {
                Ok(v > half)
            } else {
                Err(JrcError::RelaxedOutOfRange {
                    index,
                    value: v.to_f64().unwrap_or(f64::NAN),
                })
            }
        })
        .collect::<Result<Vec<bool>>>()
        .map(Selection::from_bools)
}

struct Track<'a, T> {
    ratio: Ratio<'a, T>,
    selection: Selection,
    trajectory: Vec<T>,
}

impl<T: Real> Track<'_, T> {
    /// Solves the subproblem at `kappa` and moves to the candidate if it
    /// strictly improves the auxiliary value, or if the current selection
    /// violates the cap.
    fn step(&mut self, kappa: T, cap: Option<usize>) {
        let weights = self.ratio.weights(kappa);
        let mut candidate = vertex(&weights, cap);
        let feasible = cap.is_none_or(|l| self.selection.active_count() <= l);
        if !feasible {
            if candidate.active_count() == 0 {
                let best =
                    (0..weights.len()).fold(0, |b, k| if weights[k] > weights[b] { k } else { b });
                candidate = Selection::from_indices(weights.len(), &[best]);
            }
            self.selection = candidate;
            return;
        }
        if candidate.active_count() == 0 || candidate == self.selection {
            return;
        }
        let (aux, scale) = self.ratio.auxiliary(&candidate, kappa);
        if aux > T::lit(ACCEPT_RTOL) * scale {
            self.selection = candidate;
        }
    }
}

/// Dinkelbach selection from `S = I`, `κ = 1`.
///
/// Each iteration sets `κ` to the current ratio of each operation, then
/// solves the linear subproblem. An operation whose weight is zero never
/// moves from `I`. With a cap below `n_rf` the initial `I` is infeasible
/// and the first subproblem solution is taken unconditionally.
pub fn dinkelbach_select<T: Real>(
    coeffs: &LinearCoefficients<T>,
    rho: T,
    opts: DinkelbachOptions,
) -> Result<SelectionResult<T>> {
    coeffs.validate()?;
    check_rho(rho)?;
    if opts.i_max == 0 {
        return Err(JrcError::InvalidConfig {
            field: "i_max",
            reason: "must be at least 1".into(),
        });
    }
    if opts.kappa_tol.is_nan() || opts.kappa_tol < 0.0 {
        return Err(JrcError::Negative("kappa_tol"));
    }
    let n = coeffs.n_rf();
    if n == 0 {
        return Err(JrcError::Empty("coefficients"));
    }
    check_cap(opts.max_active, n)?;

    let tol = T::lit(opts.kappa_tol);
    let mut tracks = [Ratio::com(coeffs, rho), Ratio::rad(coeffs, rho)].map(|ratio| Track {
        ratio,
        selection: Selection::all(n),
        trajectory: vec![T::one()],
    });
    let mut guarded = false;
    let mut iterations = 0;
    let mut converged = false;

    for i in 1..=opts.i_max {
        let kappas = tracks.each_ref().map(|t| t.ratio.value(&t.selection));
        guarded |= tracks.iter().any(|t| t.ratio.is_guarded(&t.selection));
        for (t, &k) in tracks.iter_mut().zip(&kappas) {
            t.trajectory.push(k);
        }
        if i > 1
            && tracks.iter().all(|t| {
                let [.., prev, cur] = t.trajectory[..] else {
                    unreachable!()
                };
                (cur - prev).abs() < tol * T::one().max(cur.abs())
            })
        {
            converged = true;
            break;
        }
        for (t, &k) in tracks.iter_mut().zip(&kappas) {
            t.step(k, opts.max_active);
        }
        iterations = i;
    }

    let [com, rad] = tracks;
    guarded |= com.ratio.is_guarded(&com.selection) || rad.ratio.is_guarded(&rad.selection);
    let objective = approx_weighted_objective(coeffs, &com.selection, &rad.selection, rho);
    Ok(SelectionResult {
        s_com: com.selection,
        s_rad: rad.selection,
        kappa_com_trajectory: com.trajectory,
        kappa_rad_trajectory: rad.trajectory,
        iterations,
        converged,
        objective,
        denominator_guarded: guarded,
    })
}

/// Index sets of size `k` from `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = (k <= n).then(|| (0..k).collect::<Vec<_>>());
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut idx = current.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                next = Some(idx);
                break;
            }
        }
        Some(current)
    })
}

fn best_selection<T: Real>(ratio: &Ratio<'_, T>, n: usize, cap: usize) -> (Selection, T) {
    let mut best = (Selection::none(n), T::zero());
    for size in 1..=cap {
        for set in combinations(n, size) {
            let s = Selection::from_indices(n, &set);
            let v = ratio.weight * ratio.value(&s);
            if v > best.1 {
                best = (s, v);
            }
        }
    }
    best
}

/// Exact maximizer of the approximated objective over all binary selection
/// pairs with at most `max_active` chains each.
///
/// The objective is a sum of one term per operation, so each operation is
/// enumerated on its own. Candidates are visited by size and then
/// lexicographically, and only a strict improvement replaces the incumbent:
/// ties resolve to the fewest chains, then the lexicographically first set.
pub fn brute_force_select<T: Real>(
    coeffs: &LinearCoefficients<T>,
    rho: T,
    max_active: Option<usize>,
) -> Result<BruteForceResult<T>> {
    coeffs.validate()?;
    check_rho(rho)?;
    let n = coeffs.n_rf();
    if n > MAX_ENUMERATION_CHAINS {
        return Err(JrcError::EnumerationTooLarge {
            n_rf: n,
            limit: MAX_ENUMERATION_CHAINS,
        });
    }
    check_cap(max_active, n)?;
    let cap = max_active.unwrap_or(n);
    let (s_com, _) = best_selection(&Ratio::com(coeffs, rho), n, cap);
    let (s_rad, _) = best_selection(&Ratio::rad(coeffs, rho), n, cap);
    let objective = approx_weighted_objective(coeffs, &s_com, &s_rad, rho);
    Ok(BruteForceResult {
        s_com,
        s_rad,
        objective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn coeffs(
        c_com: &[f64],
        g_com: &[f64],
        c_rad: &[f64],
        g_rad: &[f64],
    ) -> LinearCoefficients<f64> {
        LinearCoefficients::new(
            c_com.to_vec(),
            g_com.to_vec(),
            c_rad.to_vec(),
            g_rad.to_vec(),
        )
        .unwrap()
    }

    fn random_coeffs(rng: &mut ChaCha8Rng, n: usize) -> LinearCoefficients<f64> {
        let mut v = || {
            (0..n)
                .map(|_| rng.random_range(0.0..2.0))
                .collect::<Vec<f64>>()
        };
        let c = LinearCoefficients::new(v(), v(), v(), v()).unwrap();
        let (a, b) = (rng.random_range(0.0..0.5), rng.random_range(0.0..0.5));
        c.with_noise(a, b).unwrap()
    }

    fn all_pairs_best(c: &LinearCoefficients<f64>, rho: f64) -> f64 {
        let n = c.n_rf();
        let mut best = f64::NEG_INFINITY;
        for a in 0..1u64 << n {
            for b in 0..1u64 << n {
                let v = approx_weighted_objective(
                    c,
                    &Selection::from_mask(n, a),
                    &Selection::from_mask(n, b),
                    rho,
                );
                best = best.max(v);
            }
        }
        best
    }

    #[test]
    fn combinations_are_lexicographic() {
        let sets: Vec<_> = combinations(4, 2).collect();
        assert_eq!(
            sets,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 0).count(), 1);
        assert_eq!(combinations(2, 3).count(), 0);
        assert_eq!(combinations(10, 4).count(), 210);
    }

    #[test]
    fn negative_weights_select_nothing() {
        // weight ρ(c − κ g) < 0 for every chain
        let c = coeffs(&[1.0, 1.0], &[2.0, 3.0], &[1.0, 1.0], &[2.0, 3.0]);
        let r = solve_db_subproblem(&c, 1.0, 1.0, 0.5, None).unwrap();
        assert_eq!(r.s_com, vec![0.0, 0.0]);
        assert_eq!(r.s_rad, vec![0.0, 0.0]);
    }

    #[test]
    fn sign_rule_example() {
        // κ = 0, ρ = 1: weights equal c_com = [3, −1, 2] up to the −1 entry
        let c = coeffs(&[3.0, 0.0, 2.0], &[0.0, 1.0, 0.0], &[0.0; 3], &[0.0; 3]);
        let r = solve_db_subproblem(&c, 1.0, 0.0, 1.0, None).unwrap();
        assert_eq!(r.s_com, vec![1.0, 0.0, 1.0]);
        assert_eq!(
            round_selection(&r.s_com).unwrap(),
            Selection::from_indices(3, &[0, 2])
        );
    }

    #[test]
    fn zero_weight_chain_is_off() {
        let c = coeffs(&[2.0, 1.0], &[1.0, 1.0], &[0.0; 2], &[0.0; 2]);
        let r = solve_db_subproblem(&c, 1.0, 0.0, 1.0, None).unwrap();
        assert_eq!(r.s_com, vec![1.0, 0.0]);
    }

    #[test]
    fn cap_keeps_largest_positive_weights() {
        let c = coeffs(&[1.0, 5.0, 3.0, 5.0], &[0.0; 4], &[0.0; 4], &[0.0; 4]);
        let r = solve_db_subproblem(&c, 0.0, 0.0, 1.0, Some(2)).unwrap();
        assert_eq!(r.s_com, vec![0.0, 1.0, 0.0, 1.0]);
        assert!(solve_db_subproblem(&c, 0.0, 0.0, 1.0, Some(5)).is_err());
        assert!(solve_db_subproblem(&c, 0.0, 0.0, 1.0, Some(0)).is_err());
    }

    #[test]
    fn subproblem_matches_vertex_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let n = 6;
            let c = random_coeffs(&mut rng, n);
            let (kc, kr, rho) = (
                rng.random_range(0.0..3.0),
                rng.random_range(0.0..3.0),
                rng.random_range(0.0..=1.0),
            );
            let r = solve_db_subproblem(&c, kc, kr, rho, None).unwrap();
            let lin = |s: &[f64], w: &[f64]| s.iter().zip(w).map(|(a, b)| a * b).sum::<f64>();
            let w_com: Vec<f64> = (0..n)
                .map(|k| rho * (c.c_com[k] - kc * c.g_com[k]))
                .collect();
            let w_rad: Vec<f64> = (0..n)
                .map(|k| (1.0 - rho) * (c.c_rad[k] - kr * c.g_rad[k]))
                .collect();
            let got = lin(&r.s_com, &w_com) + lin(&r.s_rad, &w_rad);
            let mut best = f64::NEG_INFINITY;
            for a in 0..1u64 << n {
                for b in 0..1u64 << n {
                    let v = lin(&Selection::from_mask(n, a).to_real(), &w_com)
                        + lin(&Selection::from_mask(n, b).to_real(), &w_rad);
                    best = best.max(v);
                }
            }
            assert!((got - best).abs() <= 1e-12 * (1.0 + best.abs()));
        }
    }

    #[test]
    fn scale_invariant_subproblem() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let c = random_coeffs(&mut rng, 7);
            let a = solve_db_subproblem(&c, 0.8, 1.3, 0.4, Some(3)).unwrap();
            let b = solve_db_subproblem(&c.scaled(17.5), 0.8, 1.3, 0.4, Some(3)).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn single_chain_fixed_point() {
        let c = coeffs(&[4.0], &[1.0], &[1.0], &[1.0]);
        let r = dinkelbach_select(&c, 1.0, DinkelbachOptions::default()).unwrap();
        assert_eq!(r.s_com, Selection::all(1));
        assert_eq!(*r.kappa_com_trajectory.last().unwrap(), 4.0);
        assert_eq!(r.kappa_com_trajectory[0], 1.0);
        assert!(r.converged);
        assert_eq!(r.objective, 4.0);
    }

    #[test]
    fn rho_one_objective_is_comm_fraction() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let c = random_coeffs(&mut rng, 5);
            let r = dinkelbach_select(&c, 1.0, DinkelbachOptions::default()).unwrap();
            assert_eq!(r.objective, c.fraction_com(&r.s_com));
            assert_eq!(r.s_rad, Selection::all(5));
        }
    }

    #[test]
    fn dinkelbach_reaches_exhaustive_optimum() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..100 {
            let n = rng.random_range(1..=8);
            let c = random_coeffs(&mut rng, n);
            let rho = rng.random_range(0.0..=1.0);
            let r = dinkelbach_select(&c, rho, DinkelbachOptions::default()).unwrap();
            let best = all_pairs_best(&c, rho);
            assert!(
                r.objective >= best - 1e-9 * best.abs().max(1.0),
                "{} < {}",
                r.objective,
                best
            );
            assert!(r.iterations <= 20);
        }
    }

    #[test]
    fn capped_dinkelbach_matches_capped_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..100 {
            let n = rng.random_range(2..=8);
            let l = rng.random_range(1..=n);
            let c = random_coeffs(&mut rng, n);
            let rho = rng.random_range(0.0..=1.0);
            let opts = DinkelbachOptions {
                max_active: Some(l),
                ..DinkelbachOptions::default()
            };
            let r = dinkelbach_select(&c, rho, opts).unwrap();
            let bf = brute_force_select(&c, rho, Some(l)).unwrap();
            assert!(r.s_com.active_count() <= l && r.s_rad.active_count() <= l);
            assert!((r.objective - bf.objective).abs() <= 1e-9 * bf.objective.abs().max(1.0));
        }
    }

    #[test]
    fn kappa_trajectory_is_nondecreasing() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..100 {
            let c = random_coeffs(&mut rng, 8);
            let r = dinkelbach_select(&c, 0.5, DinkelbachOptions::default()).unwrap();
            for t in [&r.kappa_com_trajectory, &r.kappa_rad_trajectory] {
                // entry 0 is the fixed initial value, not a ratio
                for w in t[1..].windows(2) {
                    assert!(w[1] >= w[0], "{t:?}");
                }
            }
        }
    }

    #[test]
    fn zero_interference_is_flagged() {
        let c = coeffs(&[1.0, 2.0], &[0.0, 0.0], &[1.0, 1.0], &[1.0, 1.0]);
        let r = dinkelbach_select(&c, 0.5, DinkelbachOptions::default()).unwrap();
        assert!(r.denominator_guarded);
        assert!(r.objective.is_finite());
        let noisy = c.with_noise(0.1, 0.1).unwrap();
        assert!(
            !dinkelbach_select(&noisy, 0.5, DinkelbachOptions::default())
                .unwrap()
                .denominator_guarded
        );
    }

    #[test]
    fn deterministic() {
        let c = random_coeffs(&mut ChaCha8Rng::seed_from_u64(1), 8);
        let opts = DinkelbachOptions {
            max_active: Some(3),
            ..DinkelbachOptions::default()
        };
        assert_eq!(
            dinkelbach_select(&c, 0.3, opts).unwrap(),
            dinkelbach_select(&c, 0.3, opts).unwrap()
        );
    }

    #[test]
    fn option_errors() {
        let c = coeffs(&[1.0], &[1.0], &[1.0], &[1.0]);
        let zero_iter = DinkelbachOptions {
            i_max: 0,
            ..DinkelbachOptions::default()
        };
        assert!(dinkelbach_select(&c, 0.5, zero_iter).is_err());
        assert!(dinkelbach_select(&c, 1.5, DinkelbachOptions::default()).is_err());
    }

    #[test]
    fn brute_force_single_chain() {
        let c = coeffs(&[2.0], &[1.0], &[3.0], &[1.0]);
        let r = brute_force_select(&c, 0.5, None).unwrap();
        assert_eq!(r.s_com, Selection::all(1));
        assert_eq!(r.s_rad, Selection::all(1));
        assert_eq!(r.objective, 2.5);
    }

    #[test]
    fn brute_force_symmetric_prefers_lexicographic_first() {
        // identical chains with a noise offset: more chains always help, so
        // the cap binds and the first L indices win
        let c = coeffs(&[1.0; 5], &[1.0; 5], &[1.0; 5], &[1.0; 5])
            .with_noise(1.0, 1.0)
            .unwrap();
        let r = brute_force_select(&c, 0.5, Some(3)).unwrap();
        assert_eq!(r.s_com, Selection::from_indices(5, &[0, 1, 2]));
        assert_eq!(r.s_rad, Selection::from_indices(5, &[0, 1, 2]));
    }

    #[test]
    fn brute_force_bounds_dinkelbach() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..50 {
            let c = random_coeffs(&mut rng, 6);
            let bf = brute_force_select(&c, 0.7, None).unwrap();
            let db = dinkelbach_select(&c, 0.7, DinkelbachOptions::default()).unwrap();
            assert!(bf.objective >= db.objective - 1e-12);
            assert!((bf.objective - all_pairs_best(&c, 0.7)).abs() < 1e-12);
        }
    }

    #[test]
    fn brute_force_guard() {
        let c = coeffs(&[1.0; 17], &[1.0; 17], &[1.0; 17], &[1.0; 17]);
        assert!(matches!(
            brute_force_select(&c, 0.5, None),
            Err(JrcError::EnumerationTooLarge {
                n_rf: 17,
                limit: 16
            })
        ));
    }

    #[test]
    fn rounding() {
        assert_eq!(
            round_selection(&[0.0, 1.0, 1.0]).unwrap(),
            Selection::from_indices(3, &[1, 2])
        );
        assert_eq!(
            round_selection(&[0.2, 0.9]).unwrap(),
            Selection::from_indices(2, &[1])
        );
        assert_eq!(round_selection(&[0.5]).unwrap(), Selection::none(1));
        assert!(matches!(
            round_selection(&[0.3, 1.2]),
            Err(JrcError::RelaxedOutOfRange { index: 1, .. })
        ));
        assert!(round_selection(&[f64::NAN]).is_err());
    }
}
