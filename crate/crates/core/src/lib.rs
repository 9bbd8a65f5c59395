//! Computational toolkit for special values of Dedekind zeta functions and
//! for height functions with Northcott/Bogomolov/Lehmer-style analyses:
//!
//! - generic heights into posets, successive sets of infima, Minkowski
//!   lattice minima ([`heights`], [`lattice`]);
//! - number-field records for quadratic fields and ingested tables ([`nf`]);
//! - Dedekind zeta values in the convergence region and special values at
//!   integers n <= 1 via the functional equation ([`zeta`]);
//! - the explicit inequalities and counting bounds attached to those
//!   special values ([`bounds`]);
//! - logarithmic Mahler measures of integer Laurent polynomials ([`mahler`])
//!   and Weil heights of algebraic numbers ([`weil`]).

pub mod bounds;
pub mod error;
pub mod heights;
pub mod lattice;
pub mod mahler;
pub mod nf;
pub mod numeric;
pub mod weil;
pub mod zeta;

pub use error::{Error, Result};

/// Format a float with the given number of significant digits, using the
/// platform's correctly-rounded (round-half-even) formatter. Used for all
/// emitted CSV/JSON numbers so identical runs produce identical bytes.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    if exp >= digits as i32 || exp < -4 {
        let s = format!("{:.*e}", digits - 1, x);
        let (mantissa, e) = s.split_once('e').expect("exponent marker present");
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{mantissa}e{e}")
    } else {
        let s = format!("{x:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::format_significant;

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(format_significant(0.0, 12), "0");
        assert_eq!(format_significant(1.0, 12), "1");
        assert_eq!(format_significant(-0.25, 12), "-0.25");
        assert_eq!(format_significant(std::f64::consts::PI, 12), "3.14159265359");
        assert_eq!(format_significant(1234.5, 4), "1234"); // ties round to even
        assert_eq!(format_significant(1e-7, 12), "1e-7");
        assert_eq!(format_significant(123456789012345.0, 12), "1.23456789012e14");
    }
}
