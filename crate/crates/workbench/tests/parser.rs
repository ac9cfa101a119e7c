use clifford_morph::{Multivector, Rational, Signature};
use clifford_workbench::eval::{render, Session};
use clifford_workbench::expr::parse;
use clifford_workbench::sample;
use proptest::prelude::*;
use rand::Rng;

const ALPHABET: &[u8] = b"e0123456789 +-*^.vt()/,revgiconjstargrade\x00\xff\xc3(()";

#[test]
fn random_bytes_never_panic() {
    let mut rng = sample::rng(7);
    let mut parsed = 0;
    for _ in 0..20_000 {
        let len = rng.random_range(0..40);
        let bytes: Vec<u8> = (0..len)
            .map(|_| if rng.random_bool(0.8) { ALPHABET[rng.random_range(0..ALPHABET.len())] } else { rng.random() })
            .collect();
        let text = String::from_utf8_lossy(&bytes);
        match parse(&text, 4) {
            Ok(_) => parsed += 1,
            Err(e) => assert!(e.position <= text.len(), "{text:?}: position {} past end", e.position),
        }
    }
    assert!(parsed > 0);
}

#[test]
fn deep_nesting_is_an_error() {
    let text = format!("{}1{}", "(".repeat(10_000), ")".repeat(10_000));
    assert!(parse(&text, 4).is_err());
    let text = "rev(".repeat(5_000);
    assert!(parse(&text, 4).is_err());
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn multivector(dim: usize) -> impl Strategy<Value = Multivector<Rational>> {
    prop::collection::vec(rational(), 1 << dim).prop_map(move |c| {
        let sig = Signature::new(dim, 0).unwrap();
        let mut m = Multivector::zero(&sig);
        for (i, c) in c.into_iter().enumerate() {
            if i % 3 != 1 {
                m.set_coeff(clifford_morph::Blade(i as u32), c);
            }
        }
        m
    })
}

proptest! {
    #[test]
    fn render_parses_back(m in multivector(4)) {
        let session = Session::new(m.sig().clone(), 0).unwrap();
        let text = render(&m);
        prop_assert_eq!(session.eval_str(&text).unwrap(), m);
    }
}
