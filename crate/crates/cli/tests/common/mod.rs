use proptest::prelude::*;

const PRIMES: [u64; 8] = [2, 3, 5, 7, 11, 13, 31, 101];

fn ws() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["", "", " ", "  ", "\t"])
}

fn prime_power() -> impl Strategy<Value = (u64, u32)> {
    (prop::sample::select(PRIMES.to_vec()), 1u32..4)
}

fn int_text(p: u64, e: u32, literal_power: bool) -> String {
    if literal_power && e > 1 {
        format!("{p}^{e}")
    } else {
        p.pow(e).to_string()
    }
}

fn term() -> impl Strategy<Value = String> {
    prop_oneof![
        (2u64..5000, ws()).prop_map(|(n, w)| format!("Z/{w}{n}")),
        (prime_power(), any::<bool>(), ws()).prop_map(|((p, e), lit, w)| format!("Z/{w}{}", int_text(p, e, lit))),
        (prime_power(), any::<bool>(), ws(), ws())
            .prop_map(|((p, d), lit, a, b)| format!("GF({a}{}{b})", int_text(p, d, lit))),
        (prime_power(), 1u32..4, ws(), ws()).prop_map(|((p, d), e, a, b)| format!("N({a}{},{b}{e})", p.pow(d))),
    ]
}

/// Syntactically valid ring specs with random spacing and `^` forms.
pub fn spec_strategy() -> impl Strategy<Value = String> {
    (prop::collection::vec((term(), ws(), ws()), 1..4), ws()).prop_map(|(terms, lead)| {
        let mut s = String::from(lead);
        for (i, (t, a, b)) in terms.iter().enumerate() {
            if i > 0 {
                s.push_str(a);
                s.push('+');
                s.push_str(b);
            }
            s.push_str(t);
        }
        s
    })
}
