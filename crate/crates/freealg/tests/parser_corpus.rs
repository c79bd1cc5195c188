//! Canonical-form round trips over the polynomial and group-algebra
//! literals used throughout the verification suites: parsing the printed
//! form must reproduce both the value and the printed bytes.

use freealg::{parse_group, parse_poly};

const POLY_CORPUS: &[&str] = &[
    "xyx",
    "yxx",
    "xy",
    "yx",
    "xyx + yxx",
    "xy + yx",
    "(xy + yx)yxx",
    "xyyxx + yxyxx",
    "(xy)^2x",
    "(xy)^3x",
    "xxy",
    "xyy",
    "xxyxx",
    "((xy)^2x)^3 + (xy)^2x xy + (xy)^2x yx + yx(xy)^2x",
    "((xy)^2x)^2 + xy + yx",
    "xyxyxxyxy + xyxyxxyyx - xyyxxyxyx - yxyxxyxyx",
    "y + (x + y^3)^3",
    "(x + y^3)^2",
    "y + (x + y^4)^5",
    "(x + y^4)^3",
    "xy - yx",
    "xyxxy + xyxyx + yxxyx",
    "u^2 + 2u + 1",
    "a + 2b",
    "-1 - 4z - 8/3z^2",
    "0",
    "1",
    "-1/2",
];

const GROUP_CORPUS: &[&str] = &[
    "x^-1y^-1x^-1",
    "x^-1y^-1x^-1y^-1x^-1",
    "(xy)^-1",
    "((xy)^2x)^-1",
    "yx(xy)^-2x^-1",
    "xy + yx",
    "x^-1 + x - 2",
];

#[test]
fn poly_corpus_round_trips() {
    for text in POLY_CORPUS {
        let value = parse_poly(text).unwrap_or_else(|e| panic!("{text}: {e}"));
        let printed = value.to_string();
        let reparsed = parse_poly(&printed).unwrap_or_else(|e| panic!("{printed}: {e}"));
        assert_eq!(reparsed, value, "value round trip of {text}");
        assert_eq!(reparsed.to_string(), printed, "print stability of {text}");
    }
}

#[test]
fn group_corpus_round_trips() {
    for text in GROUP_CORPUS {
        let value = parse_group(text).unwrap_or_else(|e| panic!("{text}: {e}"));
        let printed = value.to_string();
        let reparsed = parse_group(&printed).unwrap_or_else(|e| panic!("{printed}: {e}"));
        assert_eq!(reparsed, value, "value round trip of {text}");
        assert_eq!(reparsed.to_string(), printed, "print stability of {text}");
    }
}

#[test]
fn group_mode_extends_poly_mode() {
    for text in POLY_CORPUS {
        let as_poly = parse_poly(text).unwrap();
        let as_group = parse_group(text).unwrap();
        assert_eq!(as_group.to_ncpoly().as_ref(), Some(&as_poly), "{text}");
    }
}
