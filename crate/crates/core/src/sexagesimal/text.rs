//! Text form of arcs.
//!
//! Grammar (ASCII only):
//!
//! ```text
//! value := ['-'] minutes "'" [ seconds "''" [ thirds "'''" ] ]
//! ```
//!
//! `minutes` is any run of decimal digits; `seconds` and `thirds` are one or
//! two digits below 60. The canonical form always carries all three fields,
//! with seconds and thirds zero-padded to two characters.

use super::arc::{ArcThirds, Sign};
use crate::error::{Error, Result};

/// Marker style used when emitting text.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Primes {
    /// `'`, `''`, `'''`: the canonical, parseable form.
    #[default]
    Ascii,
    /// `′`, `″`, `‴` for documentation output.
    Unicode,
}

pub fn format_sexagesimal(v: ArcThirds) -> String {
    format_with(v, Primes::Ascii)
}

pub fn format_with(v: ArcThirds, primes: Primes) -> String {
    let c = v.components();
    let sign = if c.sign == Sign::Negative { "-" } else { "" };
    let (m, s, t) = match primes {
        Primes::Ascii => ("'", "''", "'''"),
        Primes::Unicode => ("\u{2032}", "\u{2033}", "\u{2034}"),
    };
    format!(
        "{sign}{}{m}{:02}{s}{:02}{t}",
        c.minutes, c.seconds, c.thirds
    )
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn digits(&mut self) -> &[u8] {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.bytes[start..self.pos]
    }

    fn primes(&mut self) -> usize {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos] == b'\'' {
            self.pos += 1;
        }
        self.pos - start
    }

    fn at_end(&self) -> bool {
        self.pos == self.bytes.len()
    }
}

fn small_field(cur: &mut Cursor<'_>, name: &'static str, marks: usize) -> Result<u8> {
    let start = cur.pos;
    let digits = cur.digits().to_vec();
    if digits.is_empty() {
        cur.pos = start;
        return Err(cur.err(format!("expected {name} digits")));
    }
    if digits.len() > 2 {
        cur.pos = start;
        return Err(cur.err(format!("{name} takes at most two digits")));
    }
    let value = digits.iter().fold(0u8, |acc, d| acc * 10 + (d - b'0'));
    if value >= 60 {
        cur.pos = start;
        return Err(cur.err(format!("{name} value {value} is not below 60")));
    }
    let mark_at = cur.pos;
    let n = cur.primes();
    if n != marks {
        cur.pos = mark_at;
        return Err(cur.err(format!(
            "expected {marks} apostrophes after {name}, found {n}"
        )));
    }
    Ok(value)
}

pub fn parse_sexagesimal(text: &str) -> Result<ArcThirds> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let sign = if cur.bytes.first() == Some(&b'-') {
        cur.pos = 1;
        Sign::Negative
    } else {
        Sign::Positive
    };

    let start = cur.pos;
    let digits = cur.digits();
    if digits.is_empty() {
        return Err(cur.err("expected minute digits"));
    }
    let minutes: u64 = std::str::from_utf8(digits)
        .expect("ascii digits")
        .parse()
        .map_err(|_| Error::Parse {
            position: start,
            message: "minute count too large".into(),
        })?;
    let mark_at = cur.pos;
    let n = cur.primes();
    if n != 1 {
        cur.pos = mark_at;
        return Err(cur.err(format!("expected one apostrophe after minutes, found {n}")));
    }

    let mut seconds = 0;
    let mut thirds = 0;
    if !cur.at_end() {
        seconds = small_field(&mut cur, "seconds", 2)?;
        if !cur.at_end() {
            thirds = small_field(&mut cur, "thirds", 3)?;
        }
    }
    if !cur.at_end() {
        return Err(cur.err("unexpected trailing input"));
    }
    ArcThirds::from_components(sign, minutes, seconds, thirds).map_err(|e| match e {
        Error::Domain(message) => Error::Parse {
            position: start,
            message,
        },
        other => other,
    })
}

impl std::str::FromStr for ArcThirds {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_sexagesimal(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_worked_values() {
        assert_eq!(
            parse_sexagesimal("3646'11''14'''").unwrap().value(),
            13_126_274
        );
        assert_eq!(parse_sexagesimal("0'0''0'''").unwrap().value(), 0);
        assert_eq!(parse_sexagesimal("224'50''22'''").unwrap().value(), 809_422);
        assert_eq!(parse_sexagesimal("-0'0''1'''").unwrap().value(), -1);
        assert_eq!(parse_sexagesimal("225'").unwrap().value(), 810_000);
        assert_eq!(
            parse_sexagesimal("105'43''").unwrap().value(),
            105 * 3600 + 43 * 60
        );
    }

    #[test]
    fn canonical_emission() {
        assert_eq!(format_sexagesimal(ArcThirds::new(810_000)), "225'00''00'''");
        assert_eq!(
            format_sexagesimal(ArcThirds::new(13_126_274)),
            "3646'11''14'''"
        );
        assert_eq!(format_sexagesimal(ArcThirds::new(-1)), "-0'00''01'''");
        assert_eq!(
            format_with(ArcThirds::new(809_422), Primes::Unicode),
            "224′50″22‴"
        );
    }

    #[test]
    fn rejects_malformed() {
        let pos = |s: &str| match parse_sexagesimal(s) {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("{s:?} parsed as {other:?}"),
        };
        assert_eq!(pos(""), 0);
        assert_eq!(pos("'"), 0);
        assert_eq!(pos("12"), 2);
        assert_eq!(pos("12''"), 2);
        assert_eq!(pos("12'60''"), 3);
        assert_eq!(pos("12'5'"), 4);
        assert_eq!(pos("12'5''7''"), 7);
        assert_eq!(pos("12'5''75'''"), 6);
        assert_eq!(pos("12'123''"), 3);
        assert_eq!(pos("12'5''7'''x"), 10);
        assert_eq!(pos("--1'"), 1);
        assert_eq!(pos("1.5'"), 1);
    }

    #[test]
    fn ascii_round_trip_of_canonical_strings() {
        for s in [
            "0'00''00'''",
            "3437'44''48'''",
            "-46'11''14'''",
            "300'48''10'''",
        ] {
            assert_eq!(format_sexagesimal(parse_sexagesimal(s).unwrap()), s);
        }
    }
}
