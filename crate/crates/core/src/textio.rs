//! Text input for symmetric functions, operators, and D-letter words.
//!
//! One recursive-descent grammar serves three entry points:
//!
//! - [`parse_symfunc`]: basis letters with partition indices (`s[2,1]`),
//!   scalars `q`, `t`, `M`, integers, `+ - * / ^` and parentheses.
//! - [`parse_operator`]: additionally `D[k]`, `Dstar[k]`, `nabla`, and
//!   commutator brackets `[A,B]`; basis-letter atoms act by multiplication.
//! - [`parse_dword`]: formal words in the `D[k]` letters with scalar
//!   coefficients and commutator brackets.
//!
//! All three round-trip the corresponding `Display` output. Errors carry the
//! byte position of the offending token.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ops::Operator;
use crate::partitions::Partition;
use crate::qmn::DWord;
use crate::qt::{MPolyQT, RatQT};
use crate::symfunc::{Basis, SymFunc};

/// Parse a symmetric-function expression such as `s[2,1] + q*m[3]`.
/// Mixed-basis sums are normalized to the power-sum basis; a single
/// basis-element atom keeps its own basis.
///
/// # Returns
/// The parsed function; pure scalars become scalar multiples of 1.
///
/// # Errors
/// [`Error::Parse`] with a byte position for unknown atoms, malformed
/// partitions, division by a non-scalar or by zero, and trailing input.
pub fn parse_symfunc(text: &str) -> Result<SymFunc> {
    let v = Parser::new(text, Mode::Sym)?.run()?;
    match v {
        Value::Scalar(c) => Ok(SymFunc::scalar(c)),
        Value::Sym(f) => Ok(f),
        _ => unreachable!("symfunc mode only builds scalars and functions"),
    }
}

/// Parse an operator expression such as `(1/M)*[D[1],D[0]]` or
/// `nabla*e[1]*nabla^2`. Basis-letter atoms denote multiplication operators;
/// scalars denote scalar multiples of the identity.
///
/// # Errors
/// [`Error::Parse`] as for [`parse_symfunc`], plus negative operator powers.
pub fn parse_operator(text: &str) -> Result<Operator> {
    let v = Parser::new(text, Mode::Op)?.run()?;
    Ok(match v {
        Value::Scalar(c) => Operator::scalar(c),
        Value::Sym(f) => Operator::mul_by(text.trim().to_string(), f),
        Value::Word(w) => w.to_operator(text.trim().to_string()),
        Value::Op(op) => op,
    })
}

/// Parse a formal D-letter word expression such as `(1/M)*[D[1],D[0]]` into
/// a [`DWord`]. Products read left to right as operator composition, so the
/// rightmost letter acts first.
///
/// # Errors
/// [`Error::Parse`] as for [`parse_symfunc`]; basis letters and `nabla` are
/// rejected because they are not words in the D-letters.
pub fn parse_dword(text: &str) -> Result<DWord> {
    let v = Parser::new(text, Mode::Word)?.run()?;
    Ok(match v {
        Value::Scalar(c) => DWord::one().scale(&c),
        Value::Word(w) => w,
        _ => unreachable!("word mode only builds scalars and words"),
    })
}

/// Which atoms the grammar admits.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Sym,
    Op,
    Word,
}

/// Intermediate value with promotion rank scalar < symfunc/word < operator.
#[derive(Clone)]
enum Value {
    Scalar(RatQT),
    Sym(SymFunc),
    Word(DWord),
    Op(Operator),
}

impl Value {
    fn into_op(self, label: &str) -> Operator {
        match self {
            Value::Scalar(c) => Operator::scalar(c),
            Value::Sym(f) => Operator::mul_by(label.to_string(), f),
            Value::Word(w) => w.to_operator(label.to_string()),
            Value::Op(op) => op,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Int(BigInt),
    Ident(String),
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    mode: Mode,
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits form an integer");
                toks.push((Tok::Int(n), start));
                continue;
            }
            _ if b.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                toks.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => return Err(err(i, format!("unexpected character '{}'", b as char))),
        };
        toks.push((tok, i));
        i += 1;
    }
    Ok(toks)
}

impl Parser {
    fn new(text: &str, mode: Mode) -> Result<Parser> {
        Ok(Parser {
            toks: tokenize(text)?,
            pos: 0,
            end: text.len(),
            mode,
        })
    }

    fn run(mut self) -> Result<Value> {
        if self.toks.is_empty() {
            return Err(err(0, "empty input"));
        }
        let v = self.expr()?;
        if let Some((tok, at)) = self.toks.get(self.pos) {
            return Err(err(*at, format!("trailing input starting at {:?}", tok)));
        }
        Ok(v)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, at)| *at)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Tok, what: &str) -> Result<()> {
        let at = self.here();
        match self.bump() {
            Some(ref t) if t == want => Ok(()),
            _ => Err(err(at, format!("expected {}", what))),
        }
    }

    /// expr := term (('+' | '-') term)*
    fn expr(&mut self) -> Result<Value> {
        let mut acc = self.term()?;
        loop {
            let negate = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                _ => return Ok(acc),
            };
            let at = self.here();
            self.bump();
            let mut rhs = self.term()?;
            if negate {
                rhs = self.neg(rhs);
            }
            acc = self.add(acc, rhs, at)?;
        }
    }

    /// term := factor (('*' | '/') factor)*
    fn term(&mut self) -> Result<Value> {
        let mut acc = self.factor()?;
        loop {
            let divide = match self.peek() {
                Some(Tok::Star) => false,
                Some(Tok::Slash) => true,
                _ => return Ok(acc),
            };
            let at = self.here();
            self.bump();
            let rhs = self.factor()?;
            acc = if divide {
                let Value::Scalar(c) = rhs else {
                    return Err(err(at, "division is only by scalars"));
                };
                if c.is_zero() {
                    return Err(err(at, "division by zero"));
                }
                self.mul(acc, Value::Scalar(c.inv()), at)?
            } else {
                self.mul(acc, rhs, at)?
            };
        }
    }

    /// factor := '-'* power
    fn factor(&mut self) -> Result<Value> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            let v = self.factor()?;
            return Ok(self.neg(v));
        }
        self.power()
    }

    /// power := atom ('^' signed-int)?
    fn power(&mut self) -> Result<Value> {
        let base = self.atom()?;
        if !matches!(self.peek(), Some(Tok::Caret)) {
            return Ok(base);
        }
        self.bump();
        let at = self.here();
        let k = self.signed_int()?;
        match base {
            Value::Scalar(c) => Ok(Value::Scalar(c.pow(k))),
            _ if k < 0 => Err(err(at, "negative powers need a scalar base")),
            Value::Sym(f) => Ok(Value::Sym(f.pow(k as u32))),
            Value::Word(w) => {
                let mut out = DWord::one();
                for _ in 0..k {
                    out = out.mul(&w);
                }
                Ok(Value::Word(out))
            }
            Value::Op(op) => {
                let mut out = Operator::identity();
                for _ in 0..k {
                    out = out.compose(&op);
                }
                Ok(Value::Op(out))
            }
        }
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            true
        } else {
            false
        };
        let at = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => {
                let v: i64 = i64::try_from(&n).map_err(|_| err(at, "integer too large"))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(err(at, "expected an integer")),
        }
    }

    fn atom(&mut self) -> Result<Value> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Value::Scalar(RatQT::from_poly(MPolyQT::constant(n)))),
            Some(Tok::LParen) => {
                let v = self.expr()?;
                self.expect(&Tok::RParen, "a closing ')'")?;
                Ok(v)
            }
            Some(Tok::LBracket) => {
                if self.mode == Mode::Sym {
                    return Err(err(at, "commutator brackets are not symmetric functions"));
                }
                let a = self.expr()?;
                self.expect(&Tok::Comma, "a ',' between commutator entries")?;
                let b = self.expr()?;
                self.expect(&Tok::RBracket, "a closing ']'")?;
                self.commutator(a, b, at)
            }
            Some(Tok::Ident(name)) => self.ident_atom(&name, at),
            Some(t) => Err(err(at, format!("unexpected token {:?}", t))),
            None => Err(err(at, "unexpected end of input")),
        }
    }

    fn ident_atom(&mut self, name: &str, at: usize) -> Result<Value> {
        match name {
            "q" => return Ok(Value::Scalar(RatQT::q())),
            "t" => return Ok(Value::Scalar(RatQT::t())),
            "M" => return Ok(Value::Scalar(RatQT::big_m())),
            _ => {}
        }
        if self.mode != Mode::Sym {
            match name {
                "D" => {
                    let k = self.bracketed_signed_int()?;
                    return Ok(Value::Word(DWord::d(k)));
                }
                "Dstar" if self.mode == Mode::Op => {
                    let k = self.bracketed_signed_int()?;
                    return Ok(Value::Op(Operator::d_star(k)));
                }
                "nabla" if self.mode == Mode::Op => return Ok(Value::Op(Operator::nabla())),
                _ => {}
            }
        }
        if self.mode != Mode::Word {
            if let Some(basis) = single_letter_basis(name) {
                let mu = self.partition()?;
                return Ok(Value::Sym(SymFunc::basis_element(basis, mu)));
            }
        }
        Err(err(at, format!("unknown name '{}'", name)))
    }

    fn bracketed_signed_int(&mut self) -> Result<i64> {
        self.expect(&Tok::LBracket, "'[' after the letter")?;
        let k = self.signed_int()?;
        self.expect(&Tok::RBracket, "a closing ']'")?;
        Ok(k)
    }

    /// partition := '[' (int (',' int)*)? ']', weakly decreasing.
    fn partition(&mut self) -> Result<Partition> {
        self.expect(&Tok::LBracket, "'[' starting a partition")?;
        let mut parts: Vec<u32> = Vec::new();
        if matches!(self.peek(), Some(Tok::RBracket)) {
            self.bump();
            return Ok(Partition::empty());
        }
        loop {
            let at = self.here();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let p =
                        u32::try_from(&n).map_err(|_| err(at, "partition part out of range"))?;
                    parts.push(p);
                }
                _ => return Err(err(at, "expected a partition part")),
            }
            let sep_at = self.here();
            match self.bump() {
                Some(Tok::Comma) => continue,
                Some(Tok::RBracket) => break,
                _ => return Err(err(sep_at, "expected ',' or ']' in a partition")),
            }
        }
        Partition::new(parts).map_err(|e| err(self.here(), e.to_string()))
    }

    fn neg(&self, v: Value) -> Value {
        match v {
            Value::Scalar(c) => Value::Scalar(-&c),
            Value::Sym(f) => Value::Sym(f.neg()),
            Value::Word(w) => Value::Word(w.neg()),
            Value::Op(op) => Value::Op(op.neg()),
        }
    }

    fn add(&self, a: Value, b: Value, at: usize) -> Result<Value> {
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x + &y),
            (Value::Sym(f), Value::Sym(g)) => Value::Sym(f.add(&g)),
            (Value::Sym(f), Value::Scalar(c)) | (Value::Scalar(c), Value::Sym(f)) => {
                Value::Sym(f.add(&SymFunc::scalar(c)))
            }
            (Value::Word(v), Value::Word(w)) => Value::Word(v.add(&w)),
            (Value::Word(w), Value::Scalar(c)) | (Value::Scalar(c), Value::Word(w)) => {
                Value::Word(w.add(&DWord::one().scale(&c)))
            }
            (a @ Value::Op(_), b) | (a, b @ Value::Op(_)) => {
                Value::Op(self.op_of(a, at)?.add(&self.op_of(b, at)?))
            }
            _ => return Err(err(at, "cannot add these operands")),
        })
    }

    fn mul(&self, a: Value, b: Value, at: usize) -> Result<Value> {
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x * &y),
            (Value::Sym(f), Value::Sym(g)) => Value::Sym(f.mul(&g)),
            (Value::Sym(f), Value::Scalar(c)) | (Value::Scalar(c), Value::Sym(f)) => {
                Value::Sym(f.scale(&c))
            }
            (Value::Word(v), Value::Word(w)) => Value::Word(v.mul(&w)),
            (Value::Word(w), Value::Scalar(c)) | (Value::Scalar(c), Value::Word(w)) => {
                Value::Word(w.scale(&c))
            }
            (Value::Scalar(c), Value::Op(op)) | (Value::Op(op), Value::Scalar(c)) => {
                Value::Op(op.scale(c))
            }
            (a @ Value::Op(_), b) | (a, b @ Value::Op(_)) => {
                Value::Op(self.op_of(a, at)?.compose(&self.op_of(b, at)?))
            }
            _ => return Err(err(at, "cannot multiply these operands")),
        })
    }

    fn commutator(&self, a: Value, b: Value, at: usize) -> Result<Value> {
        Ok(match (a, b) {
            (Value::Word(v), Value::Word(w)) => Value::Word(v.commutator(&w)),
            (a, b) if self.mode == Mode::Op => Value::Op(Operator::commutator(
                &self.op_of(a, at)?,
                &self.op_of(b, at)?,
            )),
            _ => return Err(err(at, "commutator entries must be words in D-letters")),
        })
    }

    fn op_of(&self, v: Value, at: usize) -> Result<Operator> {
        if self.mode != Mode::Op {
            return Err(err(at, "operators are not allowed here"));
        }
        Ok(v.into_op("subexpression"))
    }
}

fn single_letter_basis(name: &str) -> Option<Basis> {
    let mut chars = name.chars();
    let c = chars.next()?;
    if chars.next().is_some() {
        return None;
    }
    Basis::from_letter(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macdonald::Engine;
    use crate::ops::operators_agree;
    use crate::qmn::{q_coprime, q_general};

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn symfunc_atoms_and_sums() {
        assert_eq!(
            parse_symfunc("e[2]").unwrap().to_p(),
            SymFunc::e_k(2).to_p()
        );
        // Mixed bases normalize to one basis on addition.
        let f = parse_symfunc("s[2,1] + q*m[3]").unwrap();
        let expected = SymFunc::s(pt(&[2, 1]))
            .add(&SymFunc::basis_element(Basis::Monomial, pt(&[3])).scale(&RatQT::q()));
        assert_eq!(f.to_p(), expected.to_p());
        // Scalars, powers, and division.
        let g = parse_symfunc("(q^2 - t)/M * p[1,1] - 3").unwrap();
        let c = &(&RatQT::q().pow(2) - &RatQT::t()) * &RatQT::big_m().inv();
        let expected = SymFunc::p(pt(&[1, 1]))
            .scale(&c)
            .sub(&SymFunc::scalar(RatQT::from_int(3)));
        assert_eq!(g.to_p(), expected.to_p());
    }

    #[test]
    fn symfunc_round_trips_display() {
        let fs = [
            SymFunc::s(pt(&[2, 1])).scale(&(&RatQT::q() * &RatQT::big_m().inv())),
            SymFunc::e_k(3).add(&SymFunc::h_k(2).scale(&-&RatQT::t())),
            SymFunc::one(),
            SymFunc::p(pt(&[2, 2, 1])).sub(&SymFunc::p_k(5).scale(&RatQT::from_int(7))),
        ];
        for f in fs {
            let text = f.to_string();
            assert_eq!(parse_symfunc(&text).unwrap().to_p(), f.to_p(), "{}", text);
        }
    }

    #[test]
    fn dword_examples_and_round_trip() {
        let w = parse_dword("(1/M)*[D[1],D[0]]").unwrap();
        assert_eq!(w, q_coprime(2, 1).unwrap());
        // Display order is the reverse of application order; the product
        // D[1]*D[0] applies D[0] first.
        let prod = parse_dword("D[1]*D[0]").unwrap();
        assert_eq!(prod, DWord::word(vec![0, 1], RatQT::one()));
        for w in [
            q_coprime(3, 2).unwrap(),
            q_coprime(5, 3).unwrap(),
            DWord::d(-2).scale(&RatQT::t()).add(&DWord::one()),
        ] {
            let text = w.to_string();
            assert_eq!(parse_dword(&text).unwrap(), w, "{}", text);
        }
    }

    #[test]
    fn operator_examples() {
        let engine = Engine::new(8);
        let q21 = parse_operator("(1/M)*[D[1],D[0]]").unwrap();
        let expected = q_general(2, 1, None).unwrap();
        assert!(operators_agree(&engine, &q21, &expected, 4).unwrap());
        // nabla acts as the eigenoperator; composition and scalars combine.
        let op = parse_operator("q*nabla*e[1] - Dstar[0]").unwrap();
        let direct = Operator::nabla()
            .compose(&Operator::e1_mul())
            .scale(RatQT::q())
            .sub(&Operator::d_star(0));
        assert!(operators_agree(&engine, &op, &direct, 4).unwrap());
    }

    #[test]
    fn parse_errors_carry_positions() {
        let Err(Error::Parse { position, .. }) = parse_symfunc("e[2") else {
            panic!("unterminated partition must fail");
        };
        assert_eq!(position, 3);
        let Err(Error::Parse { position, .. }) = parse_symfunc("s[1,2]") else {
            panic!("increasing parts are not a partition");
        };
        assert!(position > 0);
        assert!(parse_symfunc("").is_err());
        assert!(parse_symfunc("e[2] + + e[1]").is_err());
        assert!(parse_symfunc("nabla").is_err(), "operators are not symfuncs");
        assert!(parse_dword("e[2]").is_err(), "symfuncs are not words");
        assert!(parse_symfunc("e[2]/p[1]").is_err(), "non-scalar division");
        assert!(parse_operator("nabla^-1").is_err(), "negative operator power");
    }
}
