use kdv_control::grid::{TimeGrid, TimeSeries};
use kdv_control::norms::riesz_map_time;
fn main() {
    let tg = TimeGrid::new(1.0, 200).unwrap();
    let f = TimeSeries::from_fn(tg, |_| 1.0);
    let g = riesz_map_time(&f, 0.0, -2.0);
    println!("g[0..6] = {:?}", &g.values[0..6]);
    println!("g[m-3..] = {:?}", &g.values[198..]);
    let tv: f64 = g.values.windows(2).map(|w| (w[1] - w[0]).abs()).sum();
    println!("tv = {e}", e = tv);
}
