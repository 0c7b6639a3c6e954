//! One-dimensional quadrature pieces: adaptive Gauss–Kronrod (7/15) on finite
//! intervals, periodic trapezoid sums with doubling, and log-domain helpers.

use std::collections::BinaryHeap;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];

/// Gauss weights for the nodes `XGK[1], XGK[3], XGK[5], XGK[7]`.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Seven-point Gauss–Legendre nodes and weights mapped onto `[a, b]`.
pub(crate) fn gauss7(a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    (0..4).flat_map(move |k| {
        let x = XGK[2 * k + 1];
        let w = WG[k] * h;
        if x == 0.0 {
            vec![(c, w)]
        } else {
            vec![(c - h * x, w), (c + h * x, w)]
        }
    })
}

fn gk15(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for (k, &x) in XGK.iter().take(7).enumerate() {
        let s = f(c - h * x) + f(c + h * x);
        kronrod += WGK[k] * s;
        if k % 2 == 1 {
            gauss += WG[k / 2] * s;
        }
    }
    let kronrod = kronrod * h;
    let gauss = gauss * h;
    (kronrod, (kronrod - gauss).abs())
}

#[derive(PartialEq)]
struct Piece {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl Eq for Piece {}

impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Piece {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Integral estimate with an error bound.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

impl std::ops::Add for Estimate {
    type Output = Estimate;
    fn add(self, rhs: Estimate) -> Estimate {
        Estimate {
            value: self.value + rhs.value,
            error: self.error + rhs.error,
        }
    }
}

/// Globally adaptive GK15 on `[a, b]`: bisects the interval with the largest
/// error until `error ≤ max(abs_tol, rel_tol·|value|)` or `max_pieces` is hit.
pub fn integrate_adaptive(
    mut f: impl FnMut(f64) -> f64,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_pieces: usize,
) -> Estimate {
    let (value, error) = gk15(&mut f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Piece { a, b, value, error });
    let mut total = value;
    let mut total_err = error;
    while total_err > abs_tol.max(rel_tol * total.abs()) && heap.len() < max_pieces {
        let worst = heap.pop().expect("heap is nonempty");
        let mid = 0.5 * (worst.a + worst.b);
        let (v1, e1) = gk15(&mut f, worst.a, mid);
        let (v2, e2) = gk15(&mut f, mid, worst.b);
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.error;
        heap.push(Piece { a: worst.a, b: mid, value: v1, error: e1 });
        heap.push(Piece { a: mid, b: worst.b, value: v2, error: e2 });
    }
    // Re-sum to shed accumulated cancellation from the running updates.
    let mut value = NeumaierSum::default();
    let mut error = NeumaierSum::default();
    for p in heap.iter() {
        value.add(p.value);
        error.add(p.error);
    }
    Estimate {
        value: value.total(),
        error: error.total(),
    }
}

/// Mean of a `2π`-periodic function by the trapezoid rule, doubling the node
/// count from `n_min` until two successive means agree to `rel_tol` (or
/// `n_max` is reached). Returns the mean and the last change.
pub fn periodic_mean(mut g: impl FnMut(f64) -> f64, n_min: usize, n_max: usize, rel_tol: f64) -> (f64, f64) {
    let mut n = n_min.max(4);
    let step = std::f64::consts::TAU / n as f64;
    let mut sum: f64 = (0..n).map(|k| g(k as f64 * step)).sum();
    let mut mean = sum / n as f64;
    loop {
        if n >= n_max {
            return (mean, f64::NAN);
        }
        let step = std::f64::consts::TAU / (2 * n) as f64;
        let odd: f64 = (0..n).map(|k| g((2 * k + 1) as f64 * step)).sum();
        sum += odd;
        n *= 2;
        let next = sum / n as f64;
        let change = (next - mean).abs();
        mean = next;
        if change <= rel_tol * mean.abs() || (mean == 0.0 && change == 0.0) {
            return (mean, change);
        }
    }
}

/// `ln Σ exp(x_i)`, tolerant of `-∞` entries.
pub fn log_sum_exp(xs: impl IntoIterator<Item = f64>) -> f64 {
    let xs: Vec<f64> = xs.into_iter().collect();
    let m = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if !m.is_finite() {
        return m;
    }
    m + xs.iter().map(|x| (x - m).exp()).sum::<f64>().ln()
}

/// Compensated (Kahan–Babuška–Neumaier) summation.
#[derive(Clone, Copy, Debug, Default)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Smooth step: 1 on `[0, 1/2]`, 0 on `[1, ∞)`, `C^∞` in between.
pub fn bump(x: f64) -> f64 {
    if x <= 0.5 {
        return 1.0;
    }
    if x >= 1.0 {
        return 0.0;
    }
    let t = 2.0 * x - 1.0;
    let g = |s: f64| if s <= 0.0 { 0.0 } else { (-1.0 / s).exp() };
    let up = g(t);
    let down = g(1.0 - t);
    down / (up + down)
}

/// Least-squares slope and RMS residual of `ys` against `xs`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let rss: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| {
            let r = y - (intercept + slope * x);
            r * r
        })
        .sum();
    (slope, intercept, (rss / n).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gk_integrates_smooth_functions() {
        let e = integrate_adaptive(|x| x.exp(), 0.0, 1.0, 0.0, 1e-13, 100);
        assert!((e.value - (1f64.exp() - 1.0)).abs() < 1e-13);
        let e = integrate_adaptive(|x| x.sqrt(), 0.0, 1.0, 0.0, 1e-10, 200);
        assert!((e.value - 2.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn gauss7_is_exact_for_degree_13() {
        let v: f64 = gauss7(-1.0, 2.0).map(|(x, w)| w * x.powi(13)).sum();
        let exact = (2f64.powi(14) - 1.0) / 14.0;
        assert!((v - exact).abs() < 1e-10 * exact);
    }

    #[test]
    fn periodic_mean_of_trig_polynomial() {
        let (m, _) = periodic_mean(|t| 2.0 + (3.0 * t).cos() + (5.0 * t).sin().powi(2), 8, 1 << 12, 1e-14);
        assert!((m - 2.5).abs() < 1e-13);
    }

    #[test]
    fn log_sum_exp_handles_neg_infinity() {
        assert_eq!(log_sum_exp([f64::NEG_INFINITY, f64::NEG_INFINITY]), f64::NEG_INFINITY);
        let v = log_sum_exp([0.0, f64::NEG_INFINITY, 2f64.ln()]);
        assert!((v - 3f64.ln()).abs() < 1e-15);
        let big = log_sum_exp([1000.0, 1000.0]);
        assert!((big - (1000.0 + 2f64.ln())).abs() < 1e-12);
    }

    #[test]
    fn bump_is_a_smooth_step() {
        assert_eq!(bump(0.3), 1.0);
        assert_eq!(bump(1.2), 0.0);
        assert!((bump(0.75) - 0.5).abs() < 1e-15);
        let mut prev = 1.0;
        for k in 0..=100 {
            let v = bump(0.5 + 0.005 * k as f64);
            assert!(v <= prev);
            prev = v;
        }
    }

    #[test]
    fn compensated_sum() {
        let mut s = NeumaierSum::default();
        for x in [1e16, 1.0, -1e16, 1.0] {
            s.add(x);
        }
        assert_eq!(s.total(), 2.0);
    }
}
