//! Exact univariate interpolation, used to reconstruct a polynomial that is
//! only available through point evaluations (for instance the determinant
//! recursion evaluated at several parameter values).

use num_traits::Zero;

use crate::rational::Rat;

/// Coefficients (constant term first) of the unique polynomial of degree
/// `< points.len()` through the given points. Abscissae must be distinct.
pub fn interpolate(points: &[(Rat, Rat)]) -> Vec<Rat> {
    let m = points.len();
    if m == 0 {
        return Vec::new();
    }
    // Newton divided differences.
    let mut dd: Vec<Rat> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..m {
        for k in (level..m).rev() {
            let num = &dd[k] - &dd[k - 1];
            let den = &points[k].0 - &points[k - level].0;
            dd[k] = num / den;
        }
    }
    // Expand sum of dd[k] * prod_{t<k} (x - x_t) into the monomial basis.
    let mut coeffs = vec![Rat::zero(); m];
    let mut basis = vec![Rat::zero(); m];
    basis[0] = Rat::from_integer(1.into());
    let mut deg = 0usize;
    for k in 0..m {
        for d in 0..=deg {
            coeffs[d] = &coeffs[d] + &(&basis[d] * &dd[k]);
        }
        if k + 1 < m {
            let xk = points[k].0.clone();
            for d in (1..=deg + 1).rev() {
                let lower = if d >= 1 { basis[d - 1].clone() } else { Rat::zero() };
                basis[d] = lower - &basis[d] * &xk;
            }
            basis[0] = -(&basis[0] * &xk);
            deg += 1;
        }
    }
    while coeffs.len() > 1 && coeffs.last().map(Zero::is_zero).unwrap_or(false) {
        coeffs.pop();
    }
    coeffs
}

/// Horner evaluation of a coefficient vector (constant term first).
pub fn eval(coeffs: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Index of the highest nonzero coefficient, or `None` for the zero polynomial.
pub fn degree(coeffs: &[Rat]) -> Option<usize> {
    coeffs.iter().rposition(|c| !c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn reconstructs_a_quadratic() {
        // y = 1 + x + x^2 sampled at 0, 1, 2.
        let pts = vec![(int(0), int(1)), (int(1), int(3)), (int(2), int(7))];
        assert_eq!(interpolate(&pts), vec![int(1), int(1), int(1)]);
    }

    #[test]
    fn handles_rational_data() {
        // y = 3/2 - x/3 sampled at three points; degree collapses to 1.
        let f = |x: &Rat| rat(3, 2) - x * &rat(1, 3);
        let pts: Vec<(Rat, Rat)> =
            [int(-1), int(2), int(5)].into_iter().map(|x| (x.clone(), f(&x))).collect();
        let coeffs = interpolate(&pts);
        assert_eq!(coeffs, vec![rat(3, 2), rat(-1, 3)]);
        assert_eq!(degree(&coeffs), Some(1));
        assert_eq!(eval(&coeffs, &int(9)), f(&int(9)));
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        let pts = vec![(int(0), int(0)), (int(1), int(0))];
        let coeffs = interpolate(&pts);
        assert_eq!(degree(&coeffs), None);
    }
}
