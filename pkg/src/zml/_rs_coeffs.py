"""Taylor data for the Riemann-Siegel correction terms (generated file).

Generated by scripts/gen_rs_coeffs.py; do not edit by hand.
Series in u = 2*frac(sqrt(t/2pi)) - 1, valid on [-1, 1] to ~1e-18.
"""

C0 = [
    0.3826834323650897717,
    0.0,
    0.4372404680775204494,
    0.0,
    0.1323765754803435233,
    0.0,
    -0.01360502604767418865,
    0.0,
    -0.01356762197010358089,
    0.0,
    -0.001623725323144465283,
    0.0,
    0.0002970535373337969078,
    0.0,
    0.00007943300879521469588,
    0.0,
    4.655612461450450504e-7,
    0.0,
    -1.432725163095510575e-6,
    0.0,
    -1.035484711231294608e-7,
    0.0,
    1.235792708386173806e-8,
    0.0,
    1.788108385795490499e-9,
    0.0,
    -3.391414389927035907e-11,
    0.0,
    -1.63266339025659051e-11,
    0.0,
    -3.785109318541220383e-13,
    0.0,
    9.327423259201724846e-14,
    0.0,
    5.221843015978136855e-15,
    0.0,
    -3.35067307274426379e-16,
    0.0,
    -3.412426522811726494e-17,
    0.0,
    5.75120334143239916e-19,
    0.0,
    1.489530136321150545e-19,
    0.0,
    1.256537271702141685e-21,
    0.0,
    -4.721295250143425669e-22,
]

C1 = [
    0.0,
    -0.02682510262837534703,
    0.0,
    0.01378477342635185305,
    0.0,
    0.03849125048223508223,
    0.0,
    0.009871066299062076472,
    0.0,
    -0.003310759760858404333,
    0.0,
    -0.001464780857795415082,
    0.0,
    -0.00001320794062487696368,
    0.0,
    0.00005922748701847141323,
    0.0,
    5.980242585373448588e-6,
    0.0,
    -9.641322456169826353e-7,
    0.0,
    -1.833473372271441176e-7,
    0.0,
    4.4670875627178336e-9,
    0.0,
    2.709635082177274322e-9,
    0.0,
    7.785288654315851046e-11,
    0.0,
    -2.343762601089368853e-11,
    0.0,
    -1.583017278998752164e-12,
    0.0,
    1.211994157372379125e-13,
    0.0,
    1.458378116110830702e-14,
    0.0,
    -2.87863052581319175e-16,
    0.0,
    -8.662862902123724123e-17,
    0.0,
    -8.430722727137041272e-19,
    0.0,
    3.6308072230973462e-19,
    0.0,
    1.162669821283829672e-20,
    0.0,
    -1.097548671152753182e-21,
]

C2 = [
    0.005188542830293168494,
    0.0,
    0.0003094658388063474603,
    0.0,
    -0.01133594107822937338,
    0.0,
    0.002233045741958144772,
    0.0,
    0.005196637408862330205,
    0.0,
    0.0003439914407620833669,
    0.0,
    -0.0005910648427470582822,
    0.0,
    -0.0001022997254793585745,
    0.0,
    0.00002088839221699275541,
    0.0,
    5.927665493096535958e-6,
    0.0,
    -1.642383836243627598e-7,
    0.0,
    -1.516119970094068286e-7,
    0.0,
    -5.907803698206667963e-9,
    0.0,
    2.091151485947818898e-9,
    0.0,
    1.781564958329235105e-10,
    0.0,
    -1.616407245535383075e-11,
    0.0,
    -2.380696249666761571e-12,
    0.0,
    5.398265295542594918e-14,
    0.0,
    1.975014219696951527e-14,
    0.0,
    2.333286873288263483e-16,
    0.0,
    -1.118751761004808021e-16,
    0.0,
    -4.164009488883767189e-18,
    0.0,
    4.446081109291883029e-19,
    0.0,
    2.854611478363714455e-20,
    0.0,
    -1.19132314300378943e-21,
    0.0,
    -1.298163436073649912e-22,
]

C3 = [
    0.0,
    -0.001339716090719456904,
    0.0,
    0.003744215136379393705,
    0.0,
    -0.001330317891932146812,
    0.0,
    -0.002265466076547178711,
    0.0,
    0.0009548499998506730415,
    0.0,
    0.0006010038458963603912,
    0.0,
    -0.0001012885828677662195,
    0.0,
    -0.00006865733449299825642,
    0.0,
    5.985366791538598159e-7,
    0.0,
    3.331659851239947129e-6,
    0.0,
    2.191928910243508106e-7,
    0.0,
    -7.890884245681494411e-8,
    0.0,
    -9.414685081295262152e-9,
    0.0,
    9.570116210883480302e-10,
    0.0,
    1.87631374534706628e-10,
    0.0,
    -4.437837679323399327e-12,
    0.0,
    -2.242673850561735325e-12,
    0.0,
    -3.627686865735243689e-14,
    0.0,
    1.763980955082158161e-14,
    0.0,
    7.960765246786777757e-16,
    0.0,
    -9.419651490589690764e-17,
    0.0,
    -7.133103854569657825e-18,
    0.0,
    3.289910584554624319e-19,
    0.0,
    4.180730374898459347e-20,
    0.0,
    -5.550542071646302356e-22,
    0.0,
    -1.787044190626018058e-22,
]

C4 = [
    0.0004648338936176338185,
    0.0,
    -0.001005660736534047076,
    0.0,
    0.0002404485657372579302,
    0.0,
    0.001028308614970232188,
    0.0,
    -0.0007657861071755644187,
    0.0,
    -0.0002036528680308481762,
    0.0,
    0.000232122904910687279,
    0.0,
    0.00003260214424386519761,
    0.0,
    -0.00002557906251794952514,
    0.0,
    -4.107464438915744754e-6,
    0.0,
    1.178111364037129388e-6,
    0.0,
    2.445656142248457854e-7,
    0.0,
    -2.391582476734432243e-8,
    0.0,
    -7.505214207035755289e-9,
    0.0,
    1.331227941625842819e-10,
    0.0,
    1.344062675422561972e-10,
    0.0,
    3.513770042430485929e-12,
    0.0,
    -1.519154453370391934e-12,
    0.0,
    -8.915417681447087305e-14,
    0.0,
    1.119589116522853577e-14,
    0.0,
    1.051601332991481496e-15,
    0.0,
    -5.178655273646683658e-17,
    0.0,
    -8.065874861916566167e-18,
    0.0,
    1.06082045305638926e-19,
    0.0,
    4.433680674299423686e-20,
    0.0,
    4.320051147280889383e-22,
    0.0,
    -1.823038925169267119e-22,
    0.0,
    -5.119937968536069933e-24,
    0.0,
    5.694998789600615926e-25,
    0.0,
    2.658848041086686066e-26,
    0.0,
    -2.694603672523990613e-27,
    0.0,
    -8.941501975003790125e-27,
    0.0,
    -2.502944489371204922e-26,
    0.0,
    -9.262439230805762462e-26,
    0.0,
    5.61647152838987119e-26,
    0.0,
    2.304627470332463326e-24,
    0.0,
    -1.331085225412626017e-23,
    0.0,
    -2.297151659824813067e-23,
    0.0,
    -4.174387617760327504e-22,
    0.0,
    -2.676083966423438696e-21,
    0.0,
    -3.372807121170400073e-20,
    0.0,
    -3.57451246640285827e-20,
]

SERIES = (C0, C1, C2, C3, C4)
