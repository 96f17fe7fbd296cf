//! Text form of scalars shared by every file format.
//!
//! ```text
//! rat    := ['-'] digits ['/' digits]
//! scalar := rat | rat ('+'|'-') rat 'w' | ['-'] rat 'w' | 'w'
//! ```
//! `w` stands for `√d` of the active field. Whitespace is ignored. The reader also takes
//! `-w` and `a±w` as shorthands for a unit `w` coefficient; the writer never emits them.

use super::{FieldError, FieldSpec, QuadScalar, Rational};

pub fn parse_scalar(text: &str, field: FieldSpec) -> Result<QuadScalar, FieldError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = |reason: &str| FieldError::Literal {
        input: text.to_string(),
        reason: reason.to_string(),
    };
    if s.is_empty() {
        return Err(bad("empty scalar"));
    }
    let Some(body) = s.strip_suffix('w') else {
        if s.contains('w') {
            return Err(bad("'w' must end the scalar"));
        }
        return Ok(QuadScalar::from_rational_in(s.parse()?, field));
    };
    if field == FieldSpec::Rational {
        return Err(bad("'w' used over the rational field"));
    }
    // split the rational part from the w coefficient at the last sign not in leading position
    let split = body
        .char_indices()
        .skip(1)
        .filter(|(_, c)| *c == '+' || *c == '-')
        .map(|(i, _)| i)
        .last();
    let (a, b_text) = match split {
        Some(i) => (body[..i].parse::<Rational>()?, &body[i..]),
        None => (Rational::zero(), body),
    };
    let b = match b_text {
        "" | "+" => Rational::one(),
        "-" => -Rational::one(),
        t => t.strip_prefix('+').unwrap_or(t).parse::<Rational>()?,
    };
    QuadScalar::new(a, b, field)
}

pub fn format_scalar(x: &QuadScalar) -> String {
    let (a, b) = (x.a(), x.b());
    if b.is_zero() {
        return a.to_string();
    }
    if a.is_zero() {
        return if b.is_one() {
            "w".to_string()
        } else {
            format!("{}w", b)
        };
    }
    if b.is_negative() {
        format!("{}-{}w", a, b.abs())
    } else {
        format!("{}+{}w", a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F5: FieldSpec = FieldSpec::Quadratic { d: 5 };

    fn parse(s: &str) -> QuadScalar {
        parse_scalar(s, F5).unwrap()
    }

    #[test]
    fn grammar_forms() {
        assert_eq!(parse("3/4"), QuadScalar::rational(Rational::new(3, 4)));
        let x = parse("1/2 + 1/2 w");
        assert_eq!((x.a(), x.b()), (&Rational::new(1, 2), &Rational::new(1, 2)));
        let y = parse("-1/2-3w");
        assert_eq!((y.a(), y.b()), (&Rational::new(-1, 2), &Rational::from(-3)));
        assert_eq!(parse("w").b(), &Rational::one());
        assert_eq!(parse("-2/3w").b(), &Rational::new(-2, 3));
        assert_eq!(parse("-w").b(), &Rational::from(-1));
    }

    #[test]
    fn writer_is_read_back() {
        for s in ["0", "-7/3", "w", "-1w", "5/2w", "1/2+1/2w", "-1/2-1w"] {
            let x = parse(s);
            assert_eq!(parse(&format_scalar(&x)), x, "{s}");
        }
        assert_eq!(format_scalar(&parse("1/2 - 1/2w")), "1/2-1/2w");
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_scalar("", F5).is_err());
        assert!(parse_scalar("1w2", F5).is_err());
        assert!(parse_scalar("w", FieldSpec::Rational).is_err());
        assert!(parse_scalar("1/0", F5).is_err());
        assert!(parse_scalar("x", F5).is_err());
    }
}
