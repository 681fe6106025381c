/// Mixed direct sums in the default corpus.
pub const MIXED: [&str; 10] = [
    "GF(3)+GF(4)+GF(7)",
    "GF(3)+GF(3)",
    "GF(4)+GF(4)",
    "GF(3)+GF(5)",
    "Z/9+GF(4)",
    "GF(4)+N(4,2)",
    "N(3,2)+GF(5)",
    "Z/2+Z/2",
    "Z/4+GF(3)+GF(5)",
    "GF(3)+N(3,2)+GF(4)",
];

/// `Z/n` for `3 <= n <= 100`, eleven small fields, four truncated
/// polynomial rings and [`MIXED`].
pub fn default_corpus() -> Vec<String> {
    let mut out: Vec<String> = (3..=100).map(|n| format!("Z/{n}")).collect();
    out.extend([3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27].map(|q| format!("GF({q})")));
    out.extend(["N(3,2)", "N(4,2)", "N(5,2)", "N(3,3)"].map(String::from));
    out.extend(MIXED.map(String::from));
    out
}
