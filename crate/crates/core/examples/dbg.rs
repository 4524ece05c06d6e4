use catbraid::braid::BraidWord;
use catbraid::closure::hc0_presentation;
use catbraid::count::{point_count, CountRequest};
use catbraid::peripheral::{object1_algebra, peripheral_presentation};
use std::collections::BTreeMap;
use std::time::Instant;

fn main() {
    for (name, n, letters) in [("unknot", 1usize, vec![]), ("trefoil", 2, vec![1, 1, 1])] {
        let b = BraidWord::new(n, letters).unwrap();
        let hc0 = hc0_presentation(&b).unwrap();
        let peri = peripheral_presentation(&b).unwrap();
        let alg = object1_algebra(&peri, 2).unwrap();
        for q in [3u16, 5] {
            for dim in [1usize, 2] {
                let t0 = Instant::now();
                let mut ok = true;
                let mut ha = 0u64;
                let mut pa = 0u64;
                let f = catbraid::fq::Fq::new(q).unwrap();
                for lam in f.units() {
                    for mu in f.units() {
                        let mut pins = BTreeMap::new();
                        pins.insert("lambda".to_string(), lam);
                        pins.insert("mu".to_string(), mu);
                        let req = CountRequest { q, dim, pins };
                        let a = point_count(&hc0, &req).unwrap().count;
                        let p = point_count(&alg, &req).unwrap().count;
                        ha += a;
                        pa += p;
                        if a != p {
                            ok = false;
                            println!("  DIFF {name} q={q} dim={dim} λ={lam} μ={mu}: hc0={a} peri={p}");
                        }
                    }
                }
                println!(
                    "{name} q={q} dim={dim}: hc0_total={ha} peri_total={pa} {} ({:?})",
                    if ok { "MATCH" } else { "MISMATCH" },
                    t0.elapsed()
                );
            }
        }
    }
}
