use casimir_oracle::Oracle;

fn main() {
    let mut o = Oracle::standard();
    println!("s_1(1)   = {:.18e}", Oracle::to_f64(&o.s(1, 1.0)));
    println!("s_5(.01) = {:.18e}", Oracle::to_f64(&o.s(5, 0.01)));
    println!("tm(1,.5,1,2) = {:.18e}", o.lambda_tm(1, 0.5, 1.0, 2.0));
    println!("te(1,.5,1,2) = {:.18e}", o.lambda_te(1, 0.5, 1.0, 2.0));
    println!("tm(10,12,24,2) = {:.18e}", o.lambda_tm(10, 12.0, 24.0, 2.0));
    println!("metal_tm(1,.5,1) = {:.18e}", o.lambda_metal(1, 0.5, 1.0, true));
    println!("tm(1,.5,1,1e4) = {:.18e}", o.lambda_tm(1, 0.5, 1.0, 1e4));
    let q = o.log_quad(40, 2000.0);
    println!("logquad(40,2000) = {:?}", q);
}
