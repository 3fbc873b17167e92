//! Text and LaTeX rendering.
//!
//! Human-readable output is descending-degree with monic denominators; the
//! leading sign is attached to the first term and later terms join with
//! `" + "` / `" - "`. JSON stays ascending-degree (see the serde impls on the
//! types). Both the text and the LaTeX form of an `LRat` are readable back by
//! [`crate::parse::parse_lrat`].

use crate::basis::FEExpansion;
use crate::lpoly::LPoly;
use crate::lrat::LRat;
use crate::rat::BigRat;
use crate::xpoly::XPoly;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Style {
    Text,
    Latex,
}

impl Style {
    fn lambda(self) -> &'static str {
        match self {
            Style::Text => "\u{3bb}",
            Style::Latex => "\\lambda",
        }
    }
}

fn rat_atom(c: &BigRat, style: Style) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        match style {
            Style::Text => format!("{}/{}", c.numer(), c.denom()),
            Style::Latex => format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom()),
        }
    }
}

fn var_power(var: &str, k: usize, style: Style) -> String {
    match (k, style) {
        (1, _) => var.to_string(),
        (_, Style::Text) => format!("{var}^{k}"),
        (_, Style::Latex) => format!("{var}^{{{k}}}"),
    }
}

/// One monomial `c · var^k` without a leading sign; `c` must be positive
/// unless it is the leading term (handled by the caller).
fn term(c: &BigRat, var: &str, k: usize, style: Style) -> String {
    if k == 0 {
        return rat_atom(c, style);
    }
    let v = var_power(var, k, style);
    if c.is_one() {
        v
    } else if (-c).is_one() {
        format!("-{v}")
    } else {
        match style {
            Style::Text => format!("{}*{}", rat_atom(c, style), v),
            Style::Latex => format!("{} {}", rat_atom(c, style), v),
        }
    }
}

/// Polynomial in `λ`, descending degree.
pub fn lpoly_string(p: &LPoly, style: Style) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let var = style.lambda();
    let mut out = String::new();
    for k in (0..p.coeffs().len()).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            out.push_str(&term(&c, var, k, style));
        } else if c.is_negative() {
            out.push_str(" - ");
            out.push_str(&term(&(-c), var, k, style));
        } else {
            out.push_str(" + ");
            out.push_str(&term(&c, var, k, style));
        }
    }
    out
}

fn is_sum(s: &str) -> bool {
    s.contains(" + ") || s.contains(" - ")
}

fn parenthesize(s: String) -> String {
    if is_sum(&s) {
        format!("({s})")
    } else {
        s
    }
}

/// Element of `Q(λ)` as `num/den` with the monic denominator, or just the
/// numerator when the denominator is one.
pub fn lrat_string(f: &LRat, style: Style) -> String {
    let num = lpoly_string(f.num(), style);
    if f.den().is_one() {
        return num;
    }
    let den = lpoly_string(f.den(), style);
    match style {
        Style::Text => format!("{}/{}", parenthesize(num), parenthesize(den)),
        Style::Latex => format!("\\frac{{{num}}}{{{den}}}"),
    }
}

/// Polynomial in `x`, descending degree, coefficients in `Q(λ)`.
pub fn xpoly_string(p: &XPoly, style: Style) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for k in (0..p.coeffs().len()).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        let piece = if k == 0 {
            lrat_string(&c, style)
        } else {
            let v = var_power("x", k, style);
            if c.is_one() {
                v
            } else if (-&c).is_one() {
                format!("-{v}")
            } else {
                let cs = parenthesize(lrat_string(&c, style));
                match style {
                    Style::Text => format!("{cs}*{v}"),
                    Style::Latex => format!("{cs} {v}"),
                }
            }
        };
        if out.is_empty() {
            out.push_str(&piece);
        } else if let Some(rest) = piece.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&piece);
        }
    }
    out
}

/// Expansion coefficients, one `H_k` term per line in the report-friendly
/// text form.
pub fn expansion_string(e: &FEExpansion, style: Style) -> String {
    if e.coeffs.is_empty() {
        return "0".into();
    }
    let mut lines = Vec::with_capacity(e.coeffs.len());
    for (k, c) in e.coeffs.iter().enumerate() {
        let basis = match style {
            Style::Text => {
                if e.order == 1 {
                    format!("H_{k}")
                } else {
                    format!("H_{k}^({})", e.order)
                }
            }
            Style::Latex => {
                if e.order == 1 {
                    format!("H_{{{k}}}(x|\\lambda)")
                } else {
                    format!("H_{{{k}}}^{{({})}}(x|\\lambda)", e.order)
                }
            }
        };
        lines.push(format!("{basis}: {}", lrat_string(c, style)));
    }
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn lr(num: &[i64], den: &[i64]) -> LRat {
        LRat::new(
            LPoly::new(num.iter().map(|&c| rat_int(c)).collect()),
            LPoly::new(den.iter().map(|&c| rat_int(c)).collect()),
        )
    }

    #[test]
    fn poly_text() {
        let p = LPoly::new(vec![rat_int(1), rat_int(-2), rat_int(1)]);
        assert_eq!(lpoly_string(&p, Style::Text), "\u{3bb}^2 - 2*\u{3bb} + 1");
        assert_eq!(lpoly_string(&LPoly::zero(), Style::Text), "0");
        let q = LPoly::new(vec![rat(1, 2), rat_int(-1)]);
        assert_eq!(lpoly_string(&q, Style::Text), "-\u{3bb} + 1/2");
    }

    #[test]
    fn rational_function_text() {
        let f = lr(&[1, 1], &[1, -2, 1]);
        assert_eq!(
            lrat_string(&f, Style::Text),
            "(\u{3bb} + 1)/(\u{3bb}^2 - 2*\u{3bb} + 1)"
        );
        assert_eq!(lrat_string(&LRat::from_int(-3), Style::Text), "-3");
        assert_eq!(lrat_string(&lr(&[1], &[-1, 1]), Style::Text), "1/(\u{3bb} - 1)");
    }

    #[test]
    fn rational_function_latex() {
        let f = lr(&[1], &[-1, 1]);
        assert_eq!(
            lrat_string(&f, Style::Latex),
            "\\frac{1}{\\lambda - 1}"
        );
    }

    #[test]
    fn x_polynomial_text() {
        let p = XPoly::new(vec![lr(&[1], &[-1, 1]), LRat::one()]);
        assert_eq!(xpoly_string(&p, Style::Text), "x + 1/(\u{3bb} - 1)");
        let q = XPoly::new(vec![LRat::zero(), lr(&[2], &[-1, 1]), LRat::one()]);
        assert_eq!(
            xpoly_string(&q, Style::Text),
            "x^2 + (2/(\u{3bb} - 1))*x"
        );
    }
}
