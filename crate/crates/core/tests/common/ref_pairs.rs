//! Welch t and variance-ratio F reference values computed with scipy
//! (`ttest_ind(equal_var=False)`, two-sided F from `f.cdf`/`f.sf`).

pub struct RefPair {
    pub a: &'static [f64],
    pub b: &'static [f64],
    pub t: f64,
    pub t_df: f64,
    pub t_p: f64,
    pub f: f64,
    pub f_p: f64,
}

#[rustfmt::skip]
pub const PAIRS: &[RefPair] = &[
    RefPair { a: &[1.0, 2.0, 3.0, 4.0, 5.0], b: &[2.0, 4.0, 6.0, 8.0, 10.0], t: -1.8973665961010275, t_df: 5.882352941176471, t_p: 0.10753119493062718, f: 0.25, f_p: 0.20800000000000005 },
    RefPair { a: &[4.746, 2.242, 5.111, 5.064, 4.82, 6.405, 4.994, 9.066], b: &[6.523, 5.26, 2.528, 2.278, 0.751, 2.009, 9.386, 1.355], t: 1.2278862457977082, t_df: 11.857290992955452, t_p: 0.2433072200880613, f: 0.40341245240079726, f_p: 0.25403669483620517 },
    RefPair { a: &[-8.633, -0.449, -7.879, -2.579, -7.07, -1.685], b: &[2.261, 2.553, 3.799, 3.261, 5.273, 2.526, 4.557, 8.04, 1.92, 1.748, 4.314, -0.986, 6.262, 7.529], t: -5.357529599950935, t_df: 7.124172210167595, t_p: 0.0009966870521625584, f: 2.1101966185582395, f_p: 0.2580966895412018 },
    RefPair { a: &[-4.803, -1.968], b: &[-4.27, -0.483, -6.018, 1.713, -3.387, -0.482, -2.542, -5.329, -1.473], t: -0.5522426095602309, t_df: 1.805503733302683, t_p: 0.641423645375511, f: 0.6274194749428473, f_p: 0.9022999158422207 },
    RefPair { a: &[2.824, 1.22, 2.651, 4.454, 3.07, 2.532, 3.082, 3.722, 1.968, 2.171, 4.102], b: &[-5.276, -3.521], t: 7.896677063173777, t_df: 1.2229935075518465, t_p: 0.053488951608220765, f: 0.5858465906784996, f_p: 0.4412652225584883 },
    RefPair { a: &[3.039, -0.872, 1.451, 1.344, -0.46, -0.7, 1.335, 1.262], b: &[4.417, -1.348, 2.014, -4.818, -2.232, -0.472, -3.459, 1.425, 4.232, 2.039, 1.552, 0.922, 0.935, -0.966, 5.304, -3.579, 5.667, 3.024, 2.496, 0.935, -0.348, 0.993], t: -0.0668488694560543, t_df: 25.51198509015334, t_p: 0.9472231567853671, f: 0.22785808059611393, f_p: 0.05201676035727313 },
    RefPair { a: &[-4.902, -4.319, -5.085, -6.101, -5.28, -3.354, -4.041, -4.39, -4.838, -5.406, -4.141], b: &[-3.503, -1.335, -1.208, -0.729, -4.946, 1.765, -2.016], t: -3.5888301535430016, t_df: 6.989136628565202, t_p: 0.008894211885958625, f: 0.12796115858615714, f_p: 0.005139113911977043 },
    RefPair { a: &[8.55, 3.32, 3.782], b: &[-0.202, -0.817, -2.394], t: 3.5411918867072636, t_df: 2.5960799069519727, t_p: 0.04814110409240785, f: 6.558024766043574, f_p: 0.2646194028081952 },
    RefPair { a: &[-5.8, -3.924, -5.497, -3.943, -4.807, -4.547, -3.568, -4.644, -2.504, -1.781, -3.841, -1.523, -1.979, -7.236, -4.554, -7.024, -4.028, -4.786, -2.033, -1.87, -6.598, -2.618, -2.422, -4.281], b: &[7.196, -4.766, -2.153, 3.165, -3.268, 3.09, -3.735, -4.314, -0.061, -5.135, -0.51, 2.023], t: -2.7976580376374773, t_df: 13.08038758980011, t_p: 0.01502324938473339, f: 0.1854191984013937, f_p: 0.0006605726552173954 },
    RefPair { a: &[-3.961, -6.687, -9.207, -1.33, -1.486, 0.986, -0.163, -2.395, -4.778, -2.225, -3.618, -1.14, -5.321, -4.003, -1.568, 0.336], b: &[2.672, 3.196, 4.145, 6.047, 2.382, 3.532, 5.41, 0.867, 4.489, 3.282, 7.195, 5.553, 5.65, 1.142, 6.018, 5.441], t: -8.67851471367113, t_df: 26.49885864048326, t_p: 3.1698288066846285e-09, f: 2.142129375287364, f_p: 0.15152810287114482 },
    RefPair { a: &[-0.122, -4.742, -3.432, 0.439, 2.287, 5.115, 1.609, -2.019, -2.942], b: &[-4.969, -0.276, -1.94, -2.843, -2.938, -3.601, -1.105, -1.427, -3.763, -1.386, -1.078, -4.631, -1.059, -2.247, -5.32, -4.298, -2.424, -3.521], t: 2.062353749381666, t_df: 9.886344264927727, t_p: 0.06644507179116538, f: 4.343159480332819, f_p: 0.010531424928876376 },
    RefPair { a: &[-2.342, -5.025, -4.674, -5.168, -4.919, -3.157, -6.795, -5.058, -4.655, -3.891, -2.957, -2.116, -4.844, -4.485, -3.617, -6.024, -2.628, -2.257, -5.193], b: &[-0.519, -0.084, -1.39, -0.816, -1.621, 0.02, 0.0, -1.136, -0.603, -0.151, -1.014], t: -10.046205069290483, t_df: 26.558320725649434, t_p: 1.5347543195143664e-10, f: 5.308323640071515, f_p: 0.010238080919351855 },
    RefPair { a: &[6.814, -0.513, 4.69, -0.253, -1.914, 4.135, -3.577, 2.122, 1.404, -3.74, -1.816], b: &[-10.775, 0.093, -6.059, -4.045, 6.892, 1.835, -1.909, -1.002, 0.687, -8.745, -5.354], t: 1.75187866455791, t_df: 17.71258405815225, t_p: 0.0970893763106592, f: 0.47127892337022637, f_p: 0.2512730434504679 },
    RefPair { a: &[-3.0, -2.37, -3.23, -3.538, -2.079, -0.501, -3.053, -2.466, -0.73, -3.807, -1.143, -2.594, -1.177, -3.04, -0.809, -1.651, -3.132, -3.94, 0.142, -6.133, -1.623], b: &[0.337, -1.086, -2.131, -0.344, -0.913, -3.246, 1.025, -2.184, 0.327], t: -2.5920514474372514, t_df: 15.633308268403706, t_p: 0.01992316244524929, f: 1.0605659130308838, f_p: 0.9907158661594193 },
    RefPair { a: &[5.881, -1.16, 1.364], b: &[-3.807, -2.355, -5.095, -0.172, -3.354, 0.705, -2.745, -2.778, -2.496, -3.114, -5.554, -4.43, -3.923, 1.517, -3.391, -2.212], t: 2.2344189524813967, t_df: 2.228677962838351, t_p: 0.14188884044118516, f: 3.3576886460967734, f_p: 0.12472660270675773 },
    RefPair { a: &[3.082, -0.598, 0.947, -2.683, -3.457, 4.599, 5.658, 4.925, -1.615, 7.415, 3.63, -2.936, -5.9], b: &[3.664, 0.393, 5.943, 3.475, -3.073, 0.782, 6.352, 2.758], t: -0.9607806349456287, t_df: 18.12600476898899, t_p: 0.34930482554562425, f: 1.800784749735752, f_p: 0.44408461050775583 },
    RefPair { a: &[2.747, -2.919, -1.109, 6.822, 6.19, 2.551, 3.66, 0.823, 4.627, 6.877, 4.284, 5.791, -1.784, 8.872, 1.653, 0.735, 2.326, 1.797, 2.341, 3.041, 3.363, 2.978, 3.655], b: &[3.07, 4.378, 3.94, 2.908, 0.432, 1.279, 1.82, 1.326, 2.675, 0.617, 3.634, 3.411, 0.869, 4.77, -0.056, 3.829, 4.162, 2.812, 3.646, 2.728], t: 0.5967143123906873, t_df: 33.606128832655415, t_p: 0.5546970705497436, f: 3.8605826564012293, f_p: 0.004277422352638727 },
    RefPair { a: &[-4.194, -2.725, -3.845, -1.764, -3.03, -4.092, -3.148, -3.217, -5.865, -3.844, -4.765, -2.933, -1.992, -2.898, -3.492, -1.956, -3.945, -1.728, -2.458], b: &[-5.325, -9.632, -5.46, -12.701, -5.04, -11.426, 5.328, -1.776, -2.008, -9.999, -1.831, -1.931, -3.601, -5.73, -12.576, -7.083], t: 1.961301325102159, t_df: 16.263469163199346, t_p: 0.0671966449517416, f: 0.049911130206042605, f_p: 6.400742503167771e-08 },
    RefPair { a: &[3.152, 3.853], b: &[-6.381, 2.094, -3.378, -1.991, -0.577, -8.359, -6.898, -7.177, 0.133, -6.261], t: 6.153004829606866, t_df: 9.97620911894789, t_p: 0.00010899229134981167, f: 0.01866282714923955, f_p: 0.21131073116471258 },
    RefPair { a: &[1.963, 3.673, 1.725, -1.069, 9.311, 0.619, 2.313, 3.515, 1.016, 3.014, 7.915, -0.233, 1.143, 5.99, 9.134, 6.955, 3.577], b: &[8.303, 1.514, -4.365, 6.157, 5.284, -0.486, 0.263, 1.853, 1.439], t: 0.8980710489806729, t_df: 14.076395017345208, t_p: 0.3842517747316626, f: 0.7016831768807852, f_p: 0.5191103936174376 },
    RefPair { a: &[0.013, 0.76], b: &[0.295, -4.103, 2.394, -0.937, 2.453, 5.926, -2.497, -0.059, 3.311, 2.352, 2.202, -3.872], t: -0.24604832316348174, t_df: 11.299078184488392, t_p: 0.8100573651050784, f: 0.02991393670651142, f_p: 0.2683458851107414 },
    RefPair { a: &[3.07, 1.239, 3.603, -2.444, 2.783, 6.335, 2.632, -0.586], b: &[-1.911, -0.445, -1.496, -2.088, -3.466, 0.636, 0.876, 0.9, -0.058, -3.06, 0.531, -1.539, -1.366, 0.304, 0.289], t: 2.8161539846196546, t_df: 9.206415467536223, t_p: 0.019743338868735017, f: 3.4730384451202725, f_p: 0.04524040162619136 },
    RefPair { a: &[-10.277, 1.025, -2.845, -1.22, -5.462], b: &[1.223, -0.784, 2.025, -0.179, 0.802, -0.815, -0.887, 3.587, -3.002], t: -1.9414549702838624, t_df: 4.8946658256488895, t_p: 0.11110430476318556, f: 5.073294734777614, f_p: 0.049460675498985696 },
    RefPair { a: &[3.676, 3.932, 2.086, 3.365, 1.486, 2.889, 4.132, 3.798, 2.0, 3.88, 3.695], b: &[0.743, 4.862, 2.866, 2.775, 3.134, 6.979, 3.169, 7.237, 6.984, 4.021, 5.135, 5.397, 5.346, 3.374, 5.602, 2.822, 4.805, 6.474, 5.887], t: -2.918239656096622, t_df: 27.805668952557514, t_p: 0.006896749438674338, f: 0.26881225743763865, f_p: 0.03858691979323666 },
];
