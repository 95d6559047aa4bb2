#![allow(dead_code)]

/// Relations as printed, in the presentation where they live.
pub const RELATIONS: &[(&str, &str, &str)] = &[
    ("uqsl2", "K K^-1", "1"),
    ("uqsl2", "K E K^-1", "q^2 E"),
    ("uqsl2", "K F K^-1", "q^-2 F"),
    ("uqsl2", "E F - F E", "(K - K^-1)/(q - q^-1)"),
    ("cqsl2", "b a", "q a b"),
    ("cqsl2", "c a", "q a c"),
    ("cqsl2", "d b", "q b d"),
    ("cqsl2", "d c", "q c d"),
    ("cqsl2", "c b", "b c"),
    ("cqsl2", "a d - q^-1 b c", "1"),
    ("cqsl2", "d a - q b c", "1"),
    ("double", "E a", "q a E - q^2 c K"),
    ("double", "E b", "q^-1 b E - d K + a"),
    ("double", "F a", "q a F + q b K^-1"),
    ("double", "F b", "q b F"),
    ("double", "K a", "a K"),
    ("double", "K b", "q^-2 b K"),
    ("double", "E c", "q c E"),
    ("double", "E d", "q^-1 d E + c"),
    ("double", "F c", "q^-1 c F + q^-1 d K^-1 - q^-1 a"),
    ("double", "F d", "q^-1 d F - q^-1 b"),
    ("double", "K c", "q^2 c K"),
    ("double", "K d", "d K"),
];

