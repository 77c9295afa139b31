//! The 24-row table of arcs whose excess over their jyā is `k″`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::oracle::{self, Precision};
use crate::sexagesimal::{
    icbrt_rational, round_rational, ArcThirds, RadiusConstant, RationalArc, Rounding,
    DEFAULT_ROOT_PRECISION, THIRDS_PER_SECOND,
};

pub const TABLE_ROWS: u32 = 24;

/// Kaṭapayādi phrases for rows `k = 1..=24`.
pub const KATAPAYADI: [&str; 24] = [
    "lavaṇaṃ nindyaṃ",
    "kapilā gopī",
    "carārāśaya",
    "stavārthitayā",
    "laghunoddiṣṭo",
    "rājñaḥ pralayo",
    "dhāmnāṃ trinetra",
    "narakapuram",
    "savadhūṭīndro",
    "jalasūradrī",
    "himavān guru",
    "striśaṅkuvaraḥ",
    "varado vajrī",
    "tilabhūrmeruḥ",
    "kālena tatra",
    "nṛpaticaraḥ",
    "tilakaṃ sāndraṃ",
    "dhāvatisarit",
    "na me kuñjaro",
    "nivṛttajaraḥ",
    "śreṣṭhakaḷatra",
    "mamāśādhātrī",
    "dhūpo'gnīnā",
    "mbutilavanagaḥ",
];

/// The table as handed down: `(k, jyā ′, jyā ″, arc ′, arc ″)`.
pub const PRINTED_TABLE: [(u32, u32, u32, u32, u32); 24] = [
    (1, 105, 43, 105, 44),
    (2, 133, 11, 133, 13),
    (3, 152, 26, 152, 29),
    (4, 167, 46, 167, 50),
    (5, 180, 43, 180, 48),
    (6, 192, 2, 192, 8),
    (7, 202, 8, 202, 15),
    (8, 211, 20, 211, 28),
    (9, 219, 47, 219, 56),
    (10, 227, 38, 227, 48),
    (11, 234, 58, 235, 9),
    (12, 241, 52, 242, 4),
    (13, 248, 24, 248, 37),
    (14, 254, 36, 254, 50),
    (15, 260, 31, 260, 46),
    (16, 266, 10, 266, 26),
    (17, 271, 36, 271, 53),
    (18, 276, 48, 277, 6),
    (19, 281, 50, 282, 9),
    (20, 286, 40, 287, 0),
    (21, 291, 22, 291, 43),
    (22, 295, 55, 296, 17),
    (23, 300, 18, 300, 41),
    (24, 304, 36, 305, 0),
];

/// How the cube root `∛(k r²/10)` is placed in a row.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// The root is the arc, and jyā = arc − k″. Reproduces the handed-down
    /// values to within about two seconds.
    #[default]
    Commentary,
    /// The root is the jyā, and arc = jyā + k″.
    Literal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LookupEntry {
    /// `arc − jyā` in arc-seconds.
    pub k: u32,
    pub jya: ArcThirds,
    pub arc: ArcThirds,
    pub katapayadi_label: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LookupTable {
    /// Radius in minutes.
    pub radius: RationalArc,
    pub entries: Vec<LookupEntry>,
    pub mode: Mode,
}

/// A printed row converted to thirds: `(jyā, arc)`.
pub fn printed_row(k: u32) -> Option<(ArcThirds, ArcThirds)> {
    let &(_, jm, js, am, asec) = PRINTED_TABLE.get((k as usize).checked_sub(1)?)?;
    let at = |m: u32, s: u32| ArcThirds::from_seconds(i64::from(m) * 60 + i64::from(s));
    Some((at(jm, js), at(am, asec)))
}

/// `∛(k r²/10)` minutes, with `r` in minutes.
pub fn table_root(k: u32, r: &RationalArc) -> RationalArc {
    let r = r.minutes();
    let radicand = RationalArc::new(r * r * BigInt::from(k) / BigInt::from(10));
    icbrt_rational(&radicand, DEFAULT_ROOT_PRECISION).expect("non-negative radicand")
}

fn round_to_seconds(x: &RationalArc) -> ArcThirds {
    let seconds = round_rational(&(x.minutes() * BigInt::from(60)), Rounding::Nearest);
    ArcThirds::from_seconds(seconds.to_i64().expect("table value within i64"))
}

/// Builds the table for radius `r` (minutes), values rounded to seconds.
///
/// # Panics
///
/// Panics if `r` is not positive.
pub fn build_lookup_table(r: &RationalArc, mode: Mode) -> LookupTable {
    assert!(*r > RationalArc::zero(), "radius must be positive");
    let entries = (1..=TABLE_ROWS)
        .map(|k| {
            let root = round_to_seconds(&table_root(k, r));
            let diff = ArcThirds::from_seconds(i64::from(k));
            let (jya, arc) = match mode {
                Mode::Commentary => (root - diff, root),
                Mode::Literal => (root, root + diff),
            };
            LookupEntry {
                k,
                jya,
                arc,
                katapayadi_label: KATAPAYADI[k as usize - 1],
            }
        })
        .collect();
    LookupTable {
        radius: r.clone(),
        entries,
        mode,
    }
}

/// The table for the standard trijyā in commentary mode.
pub fn default_table() -> LookupTable {
    build_lookup_table(&RadiusConstant::TRIJYA.to_rational(), Mode::Commentary)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LookupResult<'a> {
    pub arc: ArcThirds,
    pub entry: &'a LookupEntry,
    /// `|m − entry.jya|`.
    pub distance: ArcThirds,
}

/// Reads the arc off the row whose jyā is nearest to `m`.
///
/// Accepted inputs lie within 30″ of the table's first and last jyā; an
/// exact tie between two rows goes to the smaller `k`.
pub fn lookup_arc(table: &LookupTable, m: ArcThirds) -> Result<LookupResult<'_>> {
    let slack = ArcThirds::new(30 * THIRDS_PER_SECOND);
    let first = table.entries.first().expect("table has rows").jya;
    let last = table.entries.last().expect("table has rows").jya;
    let (low, high) = (first - slack, last + slack);
    if m < low || m > high {
        return Err(Error::OutOfTable {
            value: m.to_string(),
            low: low.to_string(),
            high: high.to_string(),
        });
    }
    let entry = table
        .entries
        .iter()
        .min_by_key(|e| ((m - e.jya).abs(), e.k))
        .expect("table has rows");
    Ok(LookupResult {
        arc: entry.arc,
        entry,
        distance: (m - entry.jya).abs(),
    })
}

/// `7r/80` rounded to thirds: the largest jyā met in the lunar correction.
pub fn max_candra_jya(r: RadiusConstant) -> ArcThirds {
    let v = round_rational(
        &BigRational::new(r.thirds().big() * 7, BigInt::from(80)),
        Rounding::Nearest,
    );
    ArcThirds::new(v.to_i64().expect("within i64"))
}

/// `21600/2π` minutes: the radius whose arc unit is the minute exactly.
pub fn modern_radius(p: Precision) -> RationalArc {
    RationalArc::new(BigRational::from_integer(BigInt::from(10800)) / oracle::pi(p))
}

/// The arc `s` (minutes) with `s − r·sin(s/r) = k″`, by bisection on the
/// oracle sine until the bracket is narrower than `tolerance` minutes.
pub fn exact_arc_for_difference(
    k: u32,
    r: &RationalArc,
    tolerance: &BigRational,
    p: Precision,
) -> Result<RationalArc> {
    if k == 0 {
        return Ok(RationalArc::zero());
    }
    let r = r.minutes();
    let target = BigRational::new(BigInt::from(k), BigInt::from(60));
    let excess = |s: &BigRational| s - r * oracle::sin(&(s / r), p);
    // s − r sin(s/r) is increasing on (0, πr); on that range it reaches πr
    let mut lo = BigRational::from_integer(BigInt::from(0));
    let mut hi = r * oracle::pi(p);
    if excess(&hi) < target {
        return Err(Error::Domain(format!(
            "difference {k}'' exceeds the half circle"
        )));
    }
    let two = BigRational::from_integer(BigInt::from(2));
    while &hi - &lo > *tolerance {
        let mid = (&lo + &hi) / &two;
        if excess(&mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
        // keep denominators from doubling without bound
        let grid = BigRational::new(BigInt::one(), BigInt::from(1u64 << 40));
        lo = (&lo / &grid).floor() * &grid;
        hi = (&hi / &grid).ceil() * &grid;
    }
    Ok(RationalArc::new((lo + hi) / two))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seconds_diff(a: ArcThirds, b: ArcThirds) -> i64 {
        (a - b).value().abs() / THIRDS_PER_SECOND
    }

    #[test]
    fn commentary_mode_matches_printed_rows() {
        let table = default_table();
        assert_eq!(table.entries.len(), 24);
        for e in &table.entries {
            let (jya, arc) = printed_row(e.k).unwrap();
            assert!(seconds_diff(e.jya, jya) <= 2, "k = {} jya {}", e.k, e.jya);
            assert!(seconds_diff(e.arc, arc) <= 2, "k = {} arc {}", e.k, e.arc);
            assert_eq!((e.arc - e.jya).value(), 60 * i64::from(e.k));
        }
        let row1 = &table.entries[0];
        assert_eq!(
            (row1.jya.to_string(), row1.arc.to_string()),
            ("105'43''00'''".into(), "105'44''00'''".into())
        );
    }

    #[test]
    fn literal_mode_drifts() {
        let table = build_lookup_table(&RadiusConstant::TRIJYA.to_rational(), Mode::Literal);
        let worst = table
            .entries
            .iter()
            .map(|e| seconds_diff(e.jya, printed_row(e.k).unwrap().0))
            .max()
            .unwrap();
        assert!(worst > 10, "worst = {worst}");
        for pair in table.entries.windows(2) {
            assert!(pair[0].jya < pair[1].jya && pair[0].arc < pair[1].arc);
        }
    }

    #[test]
    fn lookup() {
        let table = default_table();
        let hit = lookup_arc(&table, ArcThirds::from_minutes(200)).unwrap();
        assert_eq!(hit.entry.k, 7);
        assert_eq!(hit.arc, ArcThirds::from_seconds(202 * 60 + 15));
        let first = table.entries[0].jya;
        let exact = lookup_arc(&table, first).unwrap();
        assert_eq!((exact.entry.k, exact.distance), (1, ArcThirds::ZERO));
        assert!(matches!(
            lookup_arc(&table, ArcThirds::from_minutes(310)),
            Err(Error::OutOfTable { .. })
        ));
        // midpoint between rows 1 and 2 goes to row 1
        let mid = ArcThirds::new((table.entries[0].jya.value() + table.entries[1].jya.value()) / 2);
        let (a, b) = (mid - table.entries[0].jya, table.entries[1].jya - mid);
        if a == b {
            assert_eq!(lookup_arc(&table, mid).unwrap().entry.k, 1);
        }
    }

    #[test]
    fn lunar_maximum() {
        let m = max_candra_jya(RadiusConstant::TRIJYA);
        assert_eq!(m.value(), 1_082_890);
        assert_eq!(m.to_string(), "300'48''10'''");
        let (low, _) = printed_row(23).unwrap();
        let (high, _) = printed_row(24).unwrap();
        assert!(low < m && m < high);
        assert_eq!(
            max_candra_jya(RadiusConstant::new(ArcThirds::new(80 * 1234)).unwrap()).value(),
            7 * 1234
        );
    }

    #[test]
    fn modern_values_for_last_row() {
        let p = Precision::DEFAULT;
        let r = modern_radius(p);
        let root = table_root(24, &r).to_f64() * 60.0;
        assert!(
            (root - (304.0 * 60.0 + 58.03)).abs() < 0.01,
            "root = {root}"
        );
        let tol = BigRational::new(BigInt::one(), BigInt::from(1_000_000));
        let s = exact_arc_for_difference(24, &r, &tol, p).unwrap().to_f64() * 60.0;
        assert!((s - (305.0 * 60.0 + 0.43)).abs() < 0.01, "s = {s}");
    }
}
