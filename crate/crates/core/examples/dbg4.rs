use catbraid::braid::BraidWord;
use catbraid::closure::debug_t_free_images;
use std::time::Instant;

fn main() {
    let b = BraidWord::new(4, vec![1, 1, 1, -2, 1, -2, 3]).unwrap();
    let t0 = Instant::now();
    debug_t_free_images(&b).unwrap();
    println!("images total {:?}", t0.elapsed());
}
