#include "fblab/quadrature.hpp"

namespace fblab {

// Fixed spherical point set for d=3 surface quadrature: 336-point Fibonacci
// lattice, equal weights 4*pi/N. Shipped as a table so every run sees
// bit-identical nodes.
const std::array<std::array<double, 3>, kSphereDesignSize> kSphereDesign = {{
    {0.077094249089217845, 0, 0.99702380952380953},
    {-0.098314870695635978, -0.090064475069186328, 0.9910714285714286},
    {0.01502615563657817, 0.17121529331495439, 0.98511904761904767},
    {0.12354850936147459, -0.16114715239012628, 0.97916666666666663},
    {-0.22638551051850392, 0.040044409209140312, 0.9732142857142857},
    {0.21412841686652381, 0.13621097124170323, 0.96726190476190477},
    {-0.071513329116589419, -0.26602601976455026, 0.96130952380952384},
    {-0.13617656159125449, 0.2621996828087706, 0.9553571428571429},
    {0.29499863203918036, -0.10773302728307026, 0.94940476190476186},
    {-0.30642801746281273, -0.12648903110188481, 0.94345238095238093},
    {0.14749216415975042, 0.31518218780805685, 0.9375},
    {0.10882540497605853, -0.34695253951874855, 0.93154761904761907},
    {-0.32749524961342652, 0.18979019125354954, 0.92559523809523814},
    {0.38359494658703069, 0.084332272938749023, 0.9196428571428571},
    {-0.23373879396720718, -0.33246938191896169, 0.91369047619047616},
    {-0.053915028487510105, 0.41605855375981127, 0.90773809523809523},
    {0.3304686329833178, -0.27851931373666211, 0.9017857142857143},
    {-0.44401070244049329, -0.018361236537569908, 0.89583333333333337},
    {0.32336289062976825, 0.32178926575187339, 0.88988095238095233},
    {-0.021600133653061876, -0.46712280487941793, 0.8839285714285714},
    {-0.30671022416111604, 0.36754135461462567, 0.87797619047619047},
    {0.4850922607671001, -0.065268477594061278, 0.87202380952380953},
    {-0.41036372494135426, -0.28552039132871293, 0.8660714285714286},
    {0.11195598651609621, 0.4976555847231196, 0.86011904761904767},
    {0.25853372299664168, -0.45117581897642889, 0.85416666666666663},
    {-0.50459678996654367, 0.16098013873041589, 0.8482142857142857},
    {0.48936163508628572, 0.22609748758560982, 0.84226190476190477},
    {-0.21166091690013233, -0.5057529403201555, 0.83630952380952384},
    {-0.18859629284531035, 0.52434573864114553, 0.83035714285714279},
    {0.50101783819088641, -0.26332093415314262, 0.82440476190476186},
    {-0.55559617604566269, -0.14645336895003702, 0.81845238095238093},
    {0.31528741199252336, 0.49034436658236102, 0.8125},
    {0.10012996424725056, -0.58262760702567207, 0.80654761904761907},
    {-0.47374577695991049, 0.36689535776823301, 0.80059523809523814},
    {0.60500444314591595, 0.050123381425605865, 0.79464285714285721},
    {-0.4174915165175917, -0.45129609615227273, 0.78869047619047616},
    {0.0030360018744101866, 0.62234384142181165, 0.78273809523809523},
    {0.4231297615448012, -0.46643880517884911, 0.7767857142857143},
    {-0.63431844178909669, 0.05878849061231789, 0.77083333333333337},
    {0.51312101858061687, 0.38944055897607494, 0.76488095238095233},
    {-0.11654943447915396, -0.64065876470393912, 0.7589285714285714},
    {-0.35047991894963865, 0.55694764833781141, 0.75297619047619047},
    {0.64115520510681712, -0.1757140602483776, 0.74702380952380953},
    {-0.59735868998626374, -0.30655461707988818, 0.7410714285714286},
    {0.23566266469831509, 0.6356595742179566, 0.73511904761904767},
    {0.25802392027351501, -0.63382933727377178, 0.72916666666666674},
    {-0.62408615282952784, 0.29576607443250602, 0.7232142857142857},
    {0.66587447955200263, 0.20529621881241217, 0.71726190476190477},
    {-0.35539128956836596, -0.60641222995319133, 0.71130952380952384},
    {-0.14882518495431582, 0.69305293112699695, 0.70535714285714279},
    {0.58267810951247745, -0.41390723564575266, 0.69940476190476186},
    {-0.71497133173360294, -0.089105500113923278, 0.69345238095238093},
    {0.47069055350868483, 0.55298657563966946, 0.6875},
    {0.026668194633759863, -0.73128766594651196, 0.68154761904761907},
    {-0.51750181429802211, 0.52513136114813586, 0.67559523809523814},
    {0.74171435692766952, -0.0379243537179553, 0.66964285714285721},
    {-0.57663892508437209, -0.47644779555749744, 0.66369047619047616},
    {0.10408371428849446, 0.74602089682023887, 0.65773809523809523},
    {0.43010612700056922, -0.62464718215135773, 0.6517857142857143},
    {-0.74403598257626513, 0.17120094096507552, 0.64583333333333326},
    {0.66862005574700534, 0.37881339447400336, 0.63988095238095233},
    {-0.23865230067569859, -0.73564913220143657, 0.6339285714285714},
    {-0.32295801176297445, 0.70805651386956248, 0.62797619047619047},
    {0.72081176240715439, -0.30580513985376295, 0.62202380952380953},
    {-0.74249531966683935, -0.26297660574811038, 0.6160714285714286},
    {0.37202383483374896, 0.69953771452868629, 0.61011904761904767},
    {0.1993499682173126, -0.77151942882901225, 0.60416666666666674},
    {-0.67190322131966496, 0.43667577165169619, 0.5982142857142857},
    {0.79475999198924618, 0.13259860972519213, 0.59226190476190477},
    {-0.49913730066960227, -0.63804631287275104, 0.58630952380952384},
    {-0.063277954716992726, 0.81189992436354386, 0.58035714285714279},
    {0.59816566543095273, -0.55879961184728766, 0.57440476190476186},
    {-0.82267700916034958, 0.0080267794632256553, 0.56845238095238093},
    {0.61507447734448717, 0.55251890222815536, 0.5625},
    {-0.080705974086543536, -0.82688650580304446, 0.55654761904761907},
    {-0.50142036070156981, 0.66739980945513877, 0.55059523809523814},
    {0.82438323871349328, -0.15413122296120521, 0.54464285714285721},
    {-0.71524498364019728, -0.44523834542771812, 0.53869047619047616},
    {0.2276611185862058, 0.81508314727159192, 0.53273809523809523},
    {0.38439189091389825, -0.75811587862550911, 0.5267857142857143},
    {-0.79896428256135077, 0.30064715877605602, 0.52083333333333326},
    {0.79555958814850802, 0.31934706289593451, 0.51488095238095233},
    {-0.37243972089003619, -0.7760672416015415, 0.5089285714285714},
    {-0.25061283102256976, 0.82716876194698752, 0.50297619047619047},
    {0.74649503489796842, -0.44239405018503664, 0.49702380952380953},
    {-0.85258553696310868, -0.17873654970974479, 0.4910714285714286},
    {0.50987620868109829, 0.71041238830567788, 0.48511904761904767},
    {0.10429908750277513, -0.87150502345175507, 0.47916666666666663},
    {-0.66804448530822969, 0.57426893129019341, 0.4732142857142857},
    {0.88367831470584701, 0.027909648455515555, 0.46726190476190477},
    {-0.6349773367965228, -0.61967516086851959, 0.46130952380952384},
    {0.049799668192455238, 0.88891499340313795, 0.4553571428571429},
    {0.56564456293503906, -0.6914344425897172, 0.44940476190476186},
    {-0.88708511210414609, 0.1281795214175766, 0.44345238095238093},
    {0.74310643381869246, 0.50634630246232204, 0.4375},
    {-0.20656914436622029, -0.87812063014721309, 0.43154761904761907},
    {-0.44222411737836897, 0.7894976398442114, 0.42559523809523814},
    {0.86201629405366142, -0.2843022708930954, 0.4196428571428571},
    {-0.83015517349386014, -0.37376808027261516, 0.41369047619047616},
    {0.36071311973903097, 0.83882995353035983, 0.40773809523809523},
    {0.30151038364164229, -0.8646731916465249, 0.4017857142857143},
    {-0.8086823101942251, 0.43514238290604756, 0.39583333333333337},
    {0.89269673906106961, 0.22602074028781979, 0.38988095238095233},
    {-0.50694316476391199, -0.77175610120035043, 0.3839285714285714},
    {-0.14790143988262966, 0.91392514108856393, 0.37797619047619047},
    {0.72829472498566628, -0.57548681888071507, 0.37202380952380953},
    {-0.92811491493427623, -0.067782105752289309, 0.3660714285714286},
    {0.6401686304953812, 0.67860032130232451, 0.36011904761904767},
    {-0.013685801404676148, -0.93508217342762656, 0.35416666666666663},
    {-0.62303132256193383, 0.70041329394238183, 0.3482142857142857},
    {0.93470449977837178, -0.09583468392401831, 0.34226190476190477},
    {-0.75568013617745167, -0.56199949820425943, 0.33630952380952384},
    {0.17798666096885618, 0.92692227650457437, 0.3303571428571429},
    {0.49596651829996097, -0.80546803982462845, 0.32440476190476186},
    {-0.91173945656993194, 0.25945952362425367, 0.31845238095238093},
    {0.84932002185007582, 0.42544006685382468, 0.3125},
    {-0.33957273832922147, -0.88922376972268902, 0.30654761904761907},
    {-0.35096953926247504, 0.88682742703659834, 0.30059523809523814},
    {0.85950636204162079, -0.41765344526852916, 0.2946428571428571},
    {-0.91763369886417745, -0.27314136205592221, 0.28869047619047616},
    {0.49304239841156272, 0.82278087172084136, 0.28273809523809523},
    {0.19257397639123056, -0.94143769415942591, 0.2767857142857143},
    {-0.77930194912254203, 0.56509979441631586, 0.27083333333333337},
    {0.9579965119319539, 0.10991252973146125, 0.26488095238095233},
    {-0.63321093861930455, -0.72938323404834204, 0.2589285714285714},
    {-0.025823322718393292, 0.9671278111273276, 0.25297619047619047},
    {0.67339480798572615, -0.69679169778794858, 0.24702380952380953},
    {-0.96871159656078243, 0.059011939598614664, 0.2410714285714286},
    {0.75529369121635637, 0.61176014372912801, 0.23511904761904767},
    {-0.14390204129575243, -0.96269145700987946, 0.22916666666666663},
    {-0.54495257922108009, 0.80820917407151083, 0.2232142857142857},
    {0.94907524429763523, -0.22815224171726436, 0.21726190476190477},
    {-0.85507556963329123, -0.4734913466618948, 0.21130952380952384},
    {0.31107030127009944, 0.9279351871468613, 0.2053571428571429},
    {0.39793719186626003, -0.89547961018624023, 0.19940476190476186},
    {-0.89940743858818561, 0.39197249357077835, 0.19345238095238093},
    {0.92906104979267767, 0.31888762245990016, 0.1875},
    {-0.47018955077810587, -0.86369106071397062, 0.18154761904761907},
    {-0.23697182678686704, 0.95551591596768903, 0.17559523809523814},
    {0.82104645554521682, -0.54507248954340404, 0.1696428571428571},
    {-0.97459927135990299, -0.15284530829986748, 0.16369047619047616},
    {0.61599826607689234, 0.77179325567208723, 0.15773809523809523},
    {0.067184282715845242, -0.98612746087649994, 0.1517857142857143},
    {-0.71630769310191711, 0.68237521034391235, 0.14583333333333337},
    {0.98997982424212472, -0.019320112694536106, 0.13988095238095233},
    {-0.74364819136520777, -0.65501946935519195, 0.1339285714285714},
    {0.10596774665875633, 0.9860998587056321, 0.12797619047619047},
    {0.58840815425414728, -0.79930346797478902, 0.12202380952380953},
    {-0.97449582146747993, 0.1920555060700144, 0.1160714285714286},
    {0.84887318217430696, 0.51699914500581112, 0.11011904761904767},
    {-0.27688333980325913, -0.95524076634896005, 0.10416666666666663},
    {-0.44135922106266612, 0.89193945538057073, 0.098214285714285698},
    {0.92847201422030623, -0.35976028093633783, 0.092261904761904767},
    {-0.92813805137379624, -0.36209173380764414, 0.086309523809523836},
    {0.44001039433110134, 0.89439006170262514, 0.080357142857142905},
    {0.27983147333232894, -0.95716157358021525, 0.074404761904761862},
    {-0.85325693761642829, 0.5169785971888825, 0.068452380952380931},
    {0.97876216843604369, 0.1952392574211792, 0.0625},
    {-0.59003630132150942, -0.8053940215216886, 0.056547619047619069},
    {-0.10899629030585233, 0.99275371093824105, 0.050595238095238138},
    {0.75117934344063952, -0.65858682745269981, 0.044642857142857095},
    {-0.99901345305825673, -0.021798340780259991, 0.038690476190476164},
    {0.72207054388105651, 0.69104438842920701, 0.032738095238095233},
    {-0.065650209139279103, -0.9974831204337109, 0.026785714285714302},
    {-0.62547043403141245, 0.77996968426649682, 0.02083333333333337},
    {0.98816944762063386, -0.15264239268750782, 0.014880952380952328},
    {-0.83181280213572406, -0.55498445276904795, 0.0089285714285713969},
    {0.23847471095414582, 0.97114414714067343, 0.0029761904761904656},
    {0.48015461565612966, -0.87717882290577665, -0.0029761904761904656},
    {-0.94654331255182667, 0.3224531564051743, -0.0089285714285713969},
    {0.91570065777714416, 0.40158543624332477, -0.014880952380952328},
    {-0.40389915436565088, -0.91456626076240888, -0.020833333333333259},
    {-0.31991259786968002, 0.94706834771017279, -0.026785714285714191},
    {0.87547382375380245, -0.48215537023046595, -0.032738095238095344},
    {-0.97103170984424658, -0.235797509590566, -0.038690476190476275},
    {0.55659133135664696, 0.82958610473220784, -0.044642857142857206},
    {0.14992163864581831, -0.98740246310602187, -0.050595238095238138},
    {-0.77727971845378618, 0.62660881422179826, -0.056547619047619069},
    {0.99605581434701884, 0.062980669300166645, -0.0625},
    {-0.69164694950517447, -0.71898454001608181, -0.068452380952380931},
    {0.024321460576946868, 0.99693149110723733, -0.074404761904761862},
    {0.65517999074546884, -0.75118700023270102, -0.080357142857142794},
    {-0.99003421198249764, 0.11127859274796889, -0.086309523809523725},
    {0.80475677101232435, 0.58639089389205434, -0.092261904761904656},
    {-0.19718839859632614, -0.97543359053328116, -0.098214285714285809},
    {-0.51318293664105841, 0.85193460963621792, -0.10416666666666674},
    {0.95326347366959907, -0.28135839265755619, -0.11011904761904767},
    {-0.89235296592264735, -0.43615777842249054, -0.1160714285714286},
    {0.36311185679813796, 0.92372072043551423, -0.12202380952380953},
    {0.35594784862532691, -0.92570147657341628, -0.12797619047619047},
    {-0.88706343205455251, 0.44179362293575525, -0.1339285714285714},
    {0.95172954900513174, 0.27321087956281342, -0.13988095238095233},
    {-0.51677566343745529, -0.84360864894076737, -0.14583333333333326},
    {-0.18862422287757252, 0.9702484215305931, -0.15178571428571419},
    {0.79372953508472022, -0.58746244002902137, -0.15773809523809534},
    {-0.98113268188806135, -0.10287899948811499, -0.16369047619047628},
    {0.65329596417368851, 0.737852074751287, -0.16964285714285721},
    {0.016674134654419942, -0.98432123089558676, -0.17559523809523814},
    {-0.67645131073366682, 0.71376052442317417, -0.18154761904761907},
    {0.97981768290642723, -0.0692896692435475, -0.1875},
    {-0.76838703918018536, -0.61004715745896487, -0.19345238095238093},
    {0.15431596906172595, 0.96769019971385761, -0.19940476190476186},
    {0.53919982600086813, -0.81675699661416101, -0.20535714285714279},
    {-0.94807075955822573, 0.23771857314497152, -0.21130952380952372},
    {0.85850594711668615, 0.46450490148599144, -0.21726190476190466},
    {-0.31882743662019386, -0.92115386788052811, -0.22321428571428581},
    {-0.38658811645988345, 0.89332651762996962, -0.22916666666666674},
    {0.8871947214010234, -0.39699440772493566, -0.23511904761904767},
    {-0.92097092140475467, -0.30609986647074466, -0.2410714285714286},
    {0.4715987744721768, 0.84650684193613313, -0.24702380952380953},
    {0.22370951641835607, -0.9412529411991335, -0.25297619047619047},
    {-0.79945920105789103, 0.5420525627112539, -0.2589285714285714},
    {0.95404936858444911, 0.14009954806984021, -0.26488095238095233},
    {-0.60780553883157218, -0.74647286120877687, -0.27083333333333326},
    {-0.055959600565424469, 0.95930088682952086, -0.27678571428571419},
    {0.68801716316531902, -0.66834987296406401, -0.28273809523809534},
    {-0.9570123897576418, 0.028019543309689275, -0.28869047619047628},
    {0.72322442152395439, 0.62460549376869512, -0.29464285714285721},
    {-0.11115197181933358, -0.94725273396023579, -0.30059523809523814},
    {-0.55679067156180873, 0.77201859130333506, -0.30654761904761907},
    {0.93015392676726583, -0.19276260664204514, -0.3125},
    {-0.81437575101733994, -0.48515999136439836, -0.31845238095238093},
    {0.27219306006845612, 0.90590975737326318, -0.32440476190476186},
    {0.4103299718546482, -0.84999616020369706, -0.33035714285714279},
    {-0.87477388345217433, 0.34880733510781131, -0.33630952380952372},
    {0.87863938964960409, 0.33294085286267333, -0.34226190476190466},
    {-0.42199731795242384, -0.83705739042520289, -0.34821428571428581},
    {-0.25365089132108215, 0.90012621201376131, -0.35416666666666674},
    {0.79312584522422125, -0.49118801408352247, -0.36011904761904767},
    {-0.91433994600659274, -0.17313050661375179, -0.3660714285714286},
    {0.55584248155122629, 0.74339587088600856, -0.37202380952380953},
    {0.092056327415940387, -0.92122724233263731, -0.37797619047619047},
    {-0.6883312725712819, 0.61546641763886334, -0.3839285714285714},
    {0.92079830454808353, 0.011105193014824667, -0.38988095238095233},
    {-0.66961235818307374, -0.62843874959356638, -0.39583333333333326},
    {0.069051837482576664, 0.91312654300277485, -0.40178571428571419},
    {0.56426323173395476, -0.7178834522433033, -0.40773809523809534},
    {-0.89834766506983177, 0.14775541469901643, -0.41369047619047628},
    {0.75993677857811703, 0.49638288146681048, -0.41964285714285721},
    {-0.22436371445905043, -0.87665820987702803, -0.42559523809523814},
    {-0.42540380670481226, 0.7954861744464109, -0.43154761904761907},
    {0.84831354069605791, -0.29825808735341564, -0.4375},
    {-0.82430455157582128, -0.35195453126653825, -0.44345238095238093},
    {0.36884849201525438, 0.81362531297606344, -0.44940476190476186},
    {0.27668027243476956, -0.84622567870184695, -0.45535714285714279},
    {-0.77295844068224595, 0.43557866364263237, -0.46130952380952372},
    {0.86114541482078444, 0.20023707671511792, -0.46726190476190466},
    {-0.49793097164533112, -0.72672758807702809, -0.47321428571428581},
    {-0.1232858661795776, 0.86902238219501959, -0.47916666666666674},
    {0.67539321832378341, -0.55543092304932973, -0.48511904761904767},
    {-0.86987807314481724, -0.046486448591782914, -0.4910714285714286},
    {0.60765127144825382, 0.619457234257346, -0.49702380952380953},
    {-0.029508455146941445, -0.86379638971744954, -0.50297619047619047},
    {-0.5594582503192792, 0.65421569480819097, -0.5089285714285714},
    {0.85092262040062772, -0.10405911284367482, -0.51488095238095233},
    {-0.69480200928227098, -0.49596653797026269, -0.52083333333333326},
    {0.1765445593811574, 0.83146186309259118, -0.52678571428571419},
    {0.42957868982258202, -0.72914489035609376, -0.53273809523809534},
    {-0.80567690851763663, 0.2463681999429749, -0.53869047619047628},
    {0.75703807706662285, 0.36091205027615147, -0.54464285714285721},
    {-0.31296318800591583, -0.77388560313525778, -0.55059523809523814},
    {-0.29059896254706158, 0.77833603970200282, -0.55654761904761907},
    {0.73645771529532766, -0.37579753003710131, -0.5625},
    {-0.79295509624403693, -0.21928088364054754, -0.56845238095238093},
    {0.43437887131513586, 0.69381133289686348, -0.57440476190476186},
    {0.1476024200260917, -0.80087396782336184, -0.58035714285714279},
    {-0.64640882507603681, 0.48825892019917794, -0.58630952380952372},
    {0.80213376858586394, 0.076205337490494088, -0.59226190476190466},
    {-0.53703747147695391, -0.59475240444826016, -0.59821428571428581},
    {-0.0057225988934714459, 0.79683743056585465, -0.60416666666666674},
    {0.53937933011597572, -0.58036599312508608, -0.61011904761904767},
    {-0.78514856939915678, 0.063227516702907632, -0.6160714285714286},
    {0.61795074486188917, 0.4808567950129477, -0.62202380952380953},
    {-0.13004716079907866, -0.76728980194129393, -0.62797619047619047},
    {-0.41977654414718762, 0.64955540126333722, -0.6339285714285714},
    {0.74354053205118453, -0.19416447660961794, -0.63988095238095233},
    {-0.67500315690351809, -0.35674927291564307, -0.64583333333333326},
    {0.25503892480941531, 0.7142342259267046, -0.65178571428571419},
    {0.29239885688059247, -0.69417829594959601, -0.65773809523809534},
    {-0.67975520340690943, 0.31216632626740831, -0.66369047619047628},
    {0.70702721387068423, 0.2273564662018846, -0.66964285714285721},
    {-0.36508357680390296, -0.64053497657123071, -0.67559523809523814},
    {-0.16225461931775628, 0.71355888438206094, -0.68154761904761907},
    {0.5970481717532129, -0.41337299211020773, -0.6875},
    {-0.71384477043065553, -0.097721231471357917, -0.69345238095238093},
    {0.4566662444897685, 0.54980807575785418, -0.69940476190476186},
    {0.034373714294930316, -0.70801818393737515, -0.70535714285714279},
    {-0.49936185164280383, 0.4946478570273391, -0.71130952380952372},
    {0.6962731051506168, -0.027186817048757601, -0.71726190476190466},
    {-0.52705822513329204, -0.44628547394926438, -0.72321428571428581},
    {0.08638117267350047, 0.67886247887902373, -0.72916666666666674},
    {0.3911784378392551, -0.5536961401322068, -0.73511904761904767},
    {-0.65609601162424924, 0.14265749642361952, -0.7410714285714286},
    {0.57442079466429929, 0.33465830134895808, -0.74702380952380953},
    {-0.19549639791828904, -0.62833750085200046, -0.75297619047619047},
    {-0.27735512513576743, 0.58915325513003036, -0.7589285714285714},
    {0.596001735518359, -0.24441575224177256, -0.76488095238095233},
    {-0.59787739223752911, -0.21990588003387754, -0.77083333333333326},
    {0.28897511098637935, 0.55955101582611977, -0.77678571428571419},
    {0.16294889997137729, -0.60064026693284256, -0.78273809523809534},
    {-0.51949135051851891, 0.32877966710684081, -0.78869047619047628},
    {0.59755197562573237, 0.10711846721093794, -0.79464285714285721},
    {-0.36348371315926736, -0.47636840261207553, -0.80059523809523814},
    {-0.053039629779744815, 0.58878496573999262, -0.80654761904761907},
    {0.43076327058258296, -0.39279352682674962, -0.8125},
    {-0.57457284029657363, -0.0013233695276568429, -0.81845238095238093},
    {0.41646960730328303, 0.38328821367399507, -0.82440476190476186},
    {-0.047437732945853246, -0.55520867860569367, -0.83035714285714279},
    {-0.33458246055887758, 0.43432816794660545, -0.83630952380952372},
    {0.53104290934986664, -0.092673147222254101, -0.84226190476190466},
    {-0.44624175913980441, -0.28530828573670397, -0.84821428571428581},
    {0.13383709783850445, 0.50248078251583117, -0.85416666666666674},
    {0.23614760775549809, -0.45213884070521726, -0.86011904761904767},
    {-0.46997949777731846, 0.17040995358612221, -0.8660714285714286},
    {0.4520020271829463, 0.18779947562783503, -0.87202380952380953},
    {-0.20189773679920478, -0.43404505852765463, -0.87797619047619047},
    {-0.14097899871684338, 0.44586455626461402, -0.8839285714285714},
    {0.39522893077367882, -0.22782884555969607, -0.88988095238095233},
    {-0.43380420795976948, -0.096418608397373776, -0.89583333333333326},
    {0.24774644623273109, 0.35412458808907454, -0.90178571428571419},
    {0.054873158677667254, -0.41593327218467396, -0.90773809523809534},
    {-0.31136399856861929, 0.26119374822951175, -0.91369047619047628},
    {0.39238185955346855, 0.017131596524680218, -0.91964285714285721},
    {-0.26768676215963422, -0.26761399922259466, -0.92559523809523814},
    {0.015959458719296854, 0.36326894874747967, -0.93154761904761907},
    {0.22357212274855096, -0.26666318817884638, -0.9375},
    {-0.32864845849020807, 0.043448769916919733, -0.94345238095238093},
    {0.25738093234385834, 0.17996014486093492, -0.94940476190476186},
    {-0.064182450748061046, -0.28839788939555294, -0.95535714285714279},
    {-0.13750879825661935, 0.23869505615979378, -0.96130952380952372},
    {0.24195160877990063, -0.076575626704520283, -0.96726190476190466},
    {-0.20847842950275697, -0.096905616522967891, -0.97321428571428581},
    {0.077961237619443513, 0.18749582480080296, -0.97916666666666674},
    {0.058543285550158405, -0.16159562412124021, -0.98511904761904767},
    {-0.11816663805856258, 0.061758150225896341, -0.9910714285714286},
    {0.07450236918786432, 0.019822215517583609, -0.99702380952380953},
}};

} // namespace fblab
