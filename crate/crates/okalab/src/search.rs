//! Counterexample search: a small boolean expression language over the
//! ideal predicates, evaluated against every right ideal of selected rings.
//!
//! Grammar: `or := and ("or" and)*`, `and := unary ("and" unary)*`,
//! `unary := "not" unary | predicate | "(" or ")"`. Predicates name the
//! exposed ideal properties; matches are returned in canonical order (ring
//! order, then lattice index).

use serde::Serialize;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::lab::Lab;
use crate::prime;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Pred {
    CompletelyPrime,
    Comonoform,
    ExtremelyPrime,
    Koh,
    Maximal,
    Essential,
    Dense,
    TwoSided,
    Summand,
    Proper,
    Nonzero,
}

pub const PREDICATE_NAMES: [(&str, Pred); 11] = [
    ("completely_prime", Pred::CompletelyPrime),
    ("comonoform", Pred::Comonoform),
    ("extremely_prime", Pred::ExtremelyPrime),
    ("koh", Pred::Koh),
    ("maximal", Pred::Maximal),
    ("essential", Pred::Essential),
    ("dense", Pred::Dense),
    ("two_sided", Pred::TwoSided),
    ("summand", Pred::Summand),
    ("proper", Pred::Proper),
    ("nonzero", Pred::Nonzero),
];

#[derive(Clone, Debug)]
pub enum Expr {
    Pred(Pred),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Ident(String),
    Open,
    Close,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            '(' => {
                out.push(Token::Open);
                chars.next();
            }
            ')' => {
                out.push(Token::Close);
                chars.next();
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut word = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        word.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(word));
            }
            other => {
                return Err(Error::BadExpression(format!(
                    "unexpected character {other:?}"
                )));
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat_ident(&mut self, word: &str) -> bool {
        if let Some(Token::Ident(w)) = self.peek() {
            if w == word {
                self.pos += 1;
                return true;
            }
        }
        false
    }

    fn or(&mut self) -> Result<Expr> {
        let mut lhs = self.and()?;
        while self.eat_ident("or") {
            let rhs = self.and()?;
            lhs = Expr::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.eat_ident("and") {
            let rhs = self.unary()?;
            lhs = Expr::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat_ident("not") {
            return Ok(Expr::Not(Box::new(self.unary()?)));
        }
        match self.peek().cloned() {
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.or()?;
                match self.peek() {
                    Some(Token::Close) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(Error::BadExpression("missing closing parenthesis".into())),
                }
            }
            Some(Token::Ident(w)) => {
                self.pos += 1;
                match PREDICATE_NAMES.iter().find(|(name, _)| *name == w) {
                    Some(&(_, p)) => Ok(Expr::Pred(p)),
                    None => Err(Error::UnknownPredicate(w)),
                }
            }
            Some(Token::Close) => Err(Error::BadExpression("unexpected closing parenthesis".into())),
            None => Err(Error::BadExpression("expected a predicate".into())),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(Error::BadExpression("empty expression".into()));
    }
    let mut p = Parser { tokens, pos: 0 };
    let expr = p.or()?;
    if p.pos != p.tokens.len() {
        return Err(Error::BadExpression(format!(
            "trailing input after position {}",
            p.pos
        )));
    }
    Ok(expr)
}

fn collect_preds(expr: &Expr, out: &mut Vec<Pred>) {
    match expr {
        Expr::Pred(p) => {
            if !out.contains(p) {
                out.push(*p);
            }
        }
        Expr::Not(e) => collect_preds(e, out),
        Expr::And(a, b) | Expr::Or(a, b) => {
            collect_preds(a, out);
            collect_preds(b, out);
        }
    }
}

/// One bitset per predicate actually used, computed once per lab.
struct PredSets {
    sets: Vec<(Pred, BitSet)>,
}

impl PredSets {
    fn build(lab: &Lab, needed: &[Pred]) -> PredSets {
        let lat = lab.lattice();
        let len = lat.len();
        let spectra = if needed.iter().any(|p| {
            matches!(
                p,
                Pred::CompletelyPrime | Pred::Comonoform | Pred::ExtremelyPrime | Pred::Koh
            )
        }) {
            Some(prime::spectra(lab))
        } else {
            None
        };
        let dense = if needed.contains(&Pred::Dense) {
            Some(crate::family::family_dense(lab))
        } else {
            None
        };
        let mut sets = Vec::new();
        for &p in needed {
            let mut b = BitSet::new(len);
            let mark = |b: &mut BitSet, list: &[u32]| {
                for &i in list {
                    b.set(i as usize);
                }
            };
            match p {
                Pred::CompletelyPrime => {
                    mark(&mut b, &spectra.as_ref().unwrap().completely_prime)
                }
                Pred::Comonoform => mark(&mut b, &spectra.as_ref().unwrap().comonoform),
                Pred::ExtremelyPrime => {
                    mark(&mut b, &spectra.as_ref().unwrap().extremely_prime)
                }
                Pred::Koh => mark(&mut b, &spectra.as_ref().unwrap().koh),
                Pred::Maximal => mark(&mut b, lat.maximals()),
                Pred::Essential => {
                    for i in 0..len as u32 {
                        if lat.is_essential(i) {
                            b.set(i as usize);
                        }
                    }
                }
                Pred::Dense => {
                    b = dense.as_ref().unwrap().members.clone();
                }
                Pred::TwoSided => mark(&mut b, &lat.two_sided_indices()),
                Pred::Summand => {
                    for i in 0..len as u32 {
                        if lat.is_direct_summand(i) {
                            b.set(i as usize);
                        }
                    }
                }
                Pred::Proper => {
                    for i in 0..len {
                        if i as u32 != lat.top() {
                            b.set(i);
                        }
                    }
                }
                Pred::Nonzero => {
                    for i in 0..len {
                        if i as u32 != lat.zero() {
                            b.set(i);
                        }
                    }
                }
            }
            sets.push((p, b));
        }
        PredSets { sets }
    }

    fn get(&self, p: Pred) -> &BitSet {
        &self.sets.iter().find(|(q, _)| *q == p).expect("predicate was collected").1
    }
}

fn eval(expr: &Expr, sets: &PredSets, i: usize) -> bool {
    match expr {
        Expr::Pred(p) => sets.get(*p).get(i),
        Expr::Not(e) => !eval(e, sets, i),
        Expr::And(a, b) => eval(a, sets, i) && eval(b, sets, i),
        Expr::Or(a, b) => eval(a, sets, i) || eval(b, sets, i),
    }
}

/// Lattice indices of the ideals satisfying the expression, ascending.
pub fn matches(lab: &Lab, expr: &Expr) -> Vec<u32> {
    let mut needed = Vec::new();
    collect_preds(expr, &mut needed);
    let sets = PredSets::build(lab, &needed);
    (0..lab.lattice().len())
        .filter(|&i| eval(expr, &sets, i))
        .map(|i| i as u32)
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchHit {
    pub ring: String,
    pub ideal: u32,
    pub dim: usize,
    pub basis: Vec<Vec<u16>>,
}

/// Evaluate the expression on one lab and render the hits.
pub fn hits(lab: &Lab, expr: &Expr) -> Vec<SearchHit> {
    matches(lab, expr)
        .into_iter()
        .map(|i| {
            let ideal = lab.lattice().ideal(i);
            SearchHit {
                ring: lab.ring().name().to_string(),
                ideal: i,
                dim: ideal.dim(),
                basis: (0..ideal.basis().rows())
                    .map(|r| ideal.basis().row(r).to_vec())
                    .collect(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::lab::Budget;

    fn lab_for(name: &str) -> Lab {
        let ring = catalog::find(name).expect("catalog ring").ring;
        Lab::new(&ring, Budget::default()).unwrap()
    }

    #[test]
    fn parses_precedence_and_parens() {
        // "a or b and not c" parses as a or (b and (not c)).
        let e = parse("maximal or two_sided and not proper").unwrap();
        match e {
            Expr::Or(_, rhs) => match *rhs {
                Expr::And(_, inner) => assert!(matches!(*inner, Expr::Not(_))),
                _ => panic!("and must bind tighter than or"),
            },
            _ => panic!("top operator must be or"),
        }
        assert!(parse("(maximal or proper) and nonzero").is_ok());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse(""), Err(Error::BadExpression(_))));
        assert!(matches!(parse("(maximal"), Err(Error::BadExpression(_))));
        assert!(matches!(parse("maximal)"), Err(Error::BadExpression(_))));
        assert!(matches!(parse("maximal extra"), Err(Error::BadExpression(_))));
        assert!(matches!(parse("max and proper"), Err(Error::UnknownPredicate(_))));
        assert!(matches!(parse("maximal & proper"), Err(Error::BadExpression(_))));
    }

    #[test]
    fn cp_not_comonoform_finds_the_triangular_example() {
        // On the three-by-three triangular matrix ring, completely prime
        // but not comonoform ideals exist.
        let lab = lab_for("tri3_gf2");
        let expr = parse("completely_prime and not comonoform").unwrap();
        let found = matches(&lab, &expr);
        assert!(!found.is_empty());
        for &i in &found {
            assert!(prime::completely_prime(&lab, i).0);
            assert!(!prime::is_comonoform(&lab, i));
        }
        // And on the two-by-two upper triangular ring there are none.
        let lab = lab_for("ut2_gf2");
        assert!(matches(&lab, &expr).is_empty());
    }

    #[test]
    fn extremely_prime_on_the_matrix_ring_is_empty() {
        let lab = lab_for("mat2_gf2");
        let expr = parse("extremely_prime").unwrap();
        assert!(matches(&lab, &expr).is_empty());
    }

    #[test]
    fn cp_not_maximal_on_the_triangular_ring() {
        let lab = lab_for("ut2_gf2");
        let expr = parse("completely_prime and not maximal").unwrap();
        let found = matches(&lab, &expr);
        // The two similar one-dimensional completely prime ideals.
        assert_eq!(found.len(), 2);
        for &i in &found {
            assert_eq!(lab.lattice().ideal(i).dim(), 1);
            assert!(!lab.lattice().is_two_sided(i));
        }
    }

    #[test]
    fn hits_render_bases_in_canonical_order() {
        let lab = lab_for("ut2_gf2");
        let expr = parse("dense and proper").unwrap();
        let hs = hits(&lab, &expr);
        assert_eq!(hs.len(), 1);
        assert_eq!(hs[0].dim, 2);
        assert_eq!(hs[0].ring, "ut2_gf2");
        let sorted: Vec<u32> = {
            let mut v: Vec<u32> = hs.iter().map(|h| h.ideal).collect();
            v.sort_unstable();
            v
        };
        assert_eq!(sorted, hs.iter().map(|h| h.ideal).collect::<Vec<_>>());
    }
}
