mod common;

use common::random_config;
use om_core::hyperline::from_chirotope;
use om_core::io::{chi, hls_json, vecfile};
use om_core::OmError;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn corpus_roundtrips() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..60 {
        let r = rng.gen_range(1..=4);
        let n = rng.gen_range(r..=6);
        let v = random_config(&mut rng, n, r, -5, 5);
        let vtext = vecfile::serialize(&v);
        assert_eq!(vecfile::parse(&vtext).unwrap(), v);
        let c = v.chirotope().unwrap();
        let ctext = chi::serialize(c.as_map());
        assert_eq!(&chi::parse(&ctext).unwrap(), c.as_map());
        let x = from_chirotope(&c).unwrap();
        let htext = hls_json::serialize(&x);
        let back = hls_json::parse(&htext).unwrap();
        assert_eq!(back, x);
        assert_eq!(hls_json::serialize(&back), htext);
    }
}

#[test]
fn spec_examples() {
    let a = chi::parse("2 3\n+++").unwrap();
    let b = vecfile::parse("1,0\n0,1\n-1,1")
        .unwrap()
        .chirotope()
        .unwrap();
    assert_eq!(&a, b.as_map());
    assert!(matches!(
        vecfile::parse("0.5,1\n"),
        Err(OmError::Parse { .. })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rational_rows_roundtrip(rows in proptest::collection::vec(
        proptest::collection::vec((-20i64..=20, 1i64..=9), 2), 1..6)
    ) {
        let text: String = rows
            .iter()
            .map(|row| {
                let fields: Vec<String> = row.iter().map(|(p, q)| format!("{p}/{q}")).collect();
                fields.join(",") + "\n"
            })
            .collect();
        match vecfile::parse(&text) {
            Ok(v) => {
                let canon = vecfile::serialize(&v);
                prop_assert_eq!(vecfile::parse(&canon).unwrap(), v);
                prop_assert_eq!(vecfile::serialize(&vecfile::parse(&canon).unwrap()), canon);
            }
            Err(OmError::Parse { .. }) => {
                prop_assert!(rows.iter().any(|row| row.iter().all(|(p, _)| *p == 0)));
            }
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn chi_text_roundtrip(r in 1usize..=3, extra in 0usize..=3, seed in any::<u64>()) {
        let n = r + extra;
        let len = om_core::simplex::binomial(n, r) as usize;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let body: String = (0..len).map(|_| ['-', '0', '+'][rng.gen_range(0..3)]).collect();
        let text = format!("{r} {n}\n{body}\n");
        let m = chi::parse(&text).unwrap();
        prop_assert_eq!(chi::serialize(&m), text);
    }
}
