//! Text and LaTeX presentation of closed forms, one line per piece.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bipartite::Branch;
use crate::elliptic::{ClosedForm, Piece, PieceKind};
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
}

/// `±(1/n)` in front of the elementary function; empty for `+1`.
fn prefactor(sigma: i32, n: u32, latex: bool) -> String {
    let sign = if sigma < 0 { "-" } else { "" };
    match (n, latex) {
        (1, _) => sign.into(),
        (_, false) => format!("{sign}(1/{n})·"),
        (_, true) => format!("{sign}\\frac{{1}}{{{n}}}"),
    }
}

fn poly_text(p: &Poly, latex: bool) -> String {
    if latex {
        p.latex_in("x")
    } else {
        p.display_in("x")
    }
}

/// The argument with `kappa` folded in, so that it is positive on the piece
/// for `arccosh` and `log`.
fn argument(cf: &ClosedForm, piece: &Piece, latex: bool) -> String {
    let flip = matches!(piece.kind, PieceKind::Arccosh | PieceKind::Log) && piece.kappa < 0;
    let rational = if cf.branch == Branch::Logarithmic { cf.g_rational() } else { cf.g_over_m_rational() };
    if let Some(arg) = rational {
        let arg = if flip { -arg } else { arg };
        return poly_text(&arg, latex);
    }
    // Irrational m with g stored unscaled.
    let g = if flip { -cf.g.clone() } else { cf.g.clone() };
    let m2 = &cf.m2;
    let m2_text = if m2.is_integer() { format!("{}", m2.numer()) } else { format!("{}/{}", m2.numer(), m2.denom()) };
    if latex {
        let m2_latex = if m2.is_integer() {
            m2_text
        } else {
            format!("\\frac{{{}}}{{{}}}", m2.numer(), m2.denom())
        };
        format!("\\frac{{{}}}{{\\sqrt{{{}}}}}", poly_text(&g, true), m2_latex)
    } else {
        format!("({})/√({})", poly_text(&g, false), m2_text)
    }
}

fn function_name(kind: PieceKind, latex: bool) -> &'static str {
    match (kind, latex) {
        (PieceKind::Arccos, false) => "arccos",
        (PieceKind::Arccosh, false) => "arccosh",
        (PieceKind::Arcsinh, false) => "arcsinh",
        (PieceKind::Log, false) => "log",
        (PieceKind::Arccos, true) => "\\arccos",
        (PieceKind::Arccosh, true) => "\\operatorname{arccosh}",
        (PieceKind::Arcsinh, true) => "\\operatorname{arcsinh}",
        (PieceKind::Log, true) => "\\log",
    }
}

/// One line for `piece`, e.g.
/// `∫ x/√(-p) dx = (1/3)·arccos(x^3 - 3x^2 + 3) + C  on (-1, 1 - √3)`.
pub fn render_piece(cf: &ClosedForm, piece: &Piece, format: Format) -> String {
    let latex = format == Format::Latex;
    let pre = prefactor(piece.sigma, cf.n, latex);
    let f = function_name(piece.kind, latex);
    let arg = argument(cf, piece, latex);
    let negative = piece.kind.radicand_sign() < 0;
    if latex {
        let radicand = if negative { "-p(x)" } else { "p(x)" };
        format!(
            "\\int \\frac{{x}}{{\\sqrt{{{radicand}}}}}\\,dx = {pre}{f}\\left({arg}\\right) + C \\quad x \\in {}",
            piece.interval.to_latex()
        )
    } else {
        let radicand = if negative { "-p" } else { "p" };
        format!("∫ x/√({radicand}) dx = {pre}{f}({arg}) + C  on {}", piece.interval)
    }
}

/// `p(x) = …` followed by one line per piece.
pub fn render(cf: &ClosedForm, format: Format) -> String {
    let latex = format == Format::Latex;
    let mut lines: Vec<String> = Vec::with_capacity(cf.pieces.len() + 1);
    lines.push(format!("p(x) = {}", poly_text(&cf.p, latex)));
    lines.extend(cf.pieces.iter().map(|piece| render_piece(cf, piece, format)));
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::{decide, Decision};
    use crate::quartic::QuarticCoeffs;

    fn closed(n: u32, c: [i64; 4]) -> ClosedForm {
        match decide(n, &QuarticCoeffs::from_ints(c)).unwrap() {
            Decision::Elementary(cf) => cf,
            Decision::Refused(_) => panic!("refused"),
        }
    }

    #[test]
    fn worked_instance_text() {
        let out = render(&closed(3, [-2, -3, 2, 2]), Format::Text);
        assert!(out.contains("∫ x/√(-p) dx = (1/3)·arccos(x^3 - 3x^2 + 3) + C  on (-1, 1 - √3)"), "{out}");
    }

    #[test]
    fn hyperbolic_and_log_text() {
        let out = render(&closed(2, [0, -2, 0, 2]), Format::Text);
        assert!(out.contains("(1/2)·arcsinh(x^2 - 1) + C  on ℝ"), "{out}");
        let out = render(&closed(2, [0, 2, 0, 1]), Format::Text);
        assert!(out.contains("(1/2)·log(x^2 + 1) + C"), "{out}");
    }

    #[test]
    fn latex_output() {
        let out = render(&closed(3, [-2, -3, 2, 2]), Format::Latex);
        assert!(out.contains("\\frac{1}{3}\\arccos\\left(x^{3} - 3x^{2} + 3\\right)"), "{out}");
        assert!(out.contains("1 - \\sqrt{3}"), "{out}");
    }
}
