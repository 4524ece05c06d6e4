use catbraid::braid::BraidWord;
use catbraid::closure::{hc0_presentation, writhe_adjusted_psi};
use catbraid::operators::catalog_operator;
use std::time::Instant;

fn main() {
    for letters in [vec![1, 1, 1, -2, 1, -2], vec![1, 1, 1, -2, 1, -2, 3], vec![1, 1, 1, -2, 1, -2, -3]] {
        let n = 1 + letters.iter().map(|k: &i32| k.unsigned_abs()).max().unwrap() as usize;
        let b = BraidWord::new(n, letters.clone()).unwrap();
        let op = catalog_operator("gmv_mu_central").unwrap();
        let t0 = Instant::now();
        let psi = writhe_adjusted_psi(&op, &b, true).unwrap();
        print!("{letters:?} psi {:?};", t0.elapsed());
        for (g, img) in &psi.arrow_map {
            if g.as_str().starts_with('a') {
                let maxlen = img.terms().map(|(p, _)| p.len()).max().unwrap_or(0);
                print!(" {g}:{}t/{}l", img.num_terms(), maxlen);
            }
        }
        println!();
        let t0 = Instant::now();
        let hc0 = hc0_presentation(&b).unwrap();
        println!(
            "  hc0: {} gens {} rels ({:?})",
            hc0.pres.quiver.arrows().count(),
            hc0.relations.len(),
            t0.elapsed()
        );
    }
}
