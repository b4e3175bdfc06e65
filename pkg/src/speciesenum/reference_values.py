"""Published counts used as golden values.

``KTREE_COUNTS[k][n]`` is the number of unlabeled k-trees with n hedra for
n = 0..30; ``BIPARTITE_BLOCK_COUNTS[n - 1]`` is the number of unlabeled
bipartite blocks on n vertices.
"""

BIPARTITE_BLOCK_COUNTS = (1, 1, 0, 1, 1, 5, 8, 42, 146, 956)

KTREE_COUNTS = {
    1: (
        1,
        1,
        1,
        2,
        3,
        6,
        11,
        23,
        47,
        106,
        235,
        551,
        1301,
        3159,
        7741,
        19320,
        48629,
        123867,
        317955,
        823065,
        2144505,
        5623756,
        14828074,
        39299897,
        104636890,
        279793450,
        751065460,
        2023443032,
        5469566585,
        14830871802,
        40330829030,
    ),
    2: (
        1,
        1,
        1,
        2,
        5,
        12,
        39,
        136,
        529,
        2171,
        9368,
        41534,
        188942,
        874906,
        4115060,
        19602156,
        94419351,
        459183768,
        2252217207,
        11130545494,
        55382155396,
        277255622646,
        1395731021610,
        7061871805974,
        35896206800034,
        183241761631584,
        939081790240231,
        4830116366008952,
        24927175920361855,
        129047003236769110,
        670024248072778235,
    ),
    3: (
        1,
        1,
        1,
        2,
        5,
        15,
        58,
        275,
        1505,
        9003,
        56931,
        372973,
        2506312,
        17165954,
        119398333,
        841244274,
        5993093551,
        43109340222,
        312747109787,
        2286190318744,
        16826338257708,
        124605344758149,
        927910207739261,
        6945172081954449,
        52225283886702922,
        394398440097305861,
        2990207055800156659,
        22753619938517594709,
        173727411594289881739,
        1330614569159767263501,
        10221394007530945428347,
    ),
    4: (
        1,
        1,
        1,
        2,
        5,
        15,
        64,
        331,
        2150,
        15817,
        127194,
        1077639,
        9466983,
        85252938,
        782238933,
        7283470324,
        68639621442,
        653492361220,
        6276834750665,
        60759388837299,
        592227182125701,
        5808446697002391,
        57289008242377068,
        567939935463185078,
        5656700148512008902,
        56583199285317631541,
        568236762643725657852,
        5727423267612393252616,
        57924486783495226147615,
        587672090447840337304025,
        5979782184127687211698807,
    ),
    5: (
        1,
        1,
        1,
        2,
        5,
        15,
        64,
        342,
        2321,
        18578,
        168287,
        1656209,
        17288336,
        188006362,
        2105867058,
        24108331027,
        280638347609,
        3310098377912,
        39462525169310,
        474697793413215,
        5754095507495584,
        70216415130786725,
        861924378411516159,
        10636562125193377459,
        131890971196221692874,
        1642577274341274449247,
        20538830517384955820622,
        257767439475728146293796,
        3246108646710813383678978,
        41008581189552637540038747,
        519599497193547405843864376,
    ),
    6: (
        1,
        1,
        1,
        2,
        5,
        15,
        64,
        342,
        2344,
        19090,
        179562,
        1878277,
        21365403,
        258965451,
        3294561195,
        43472906719,
        589744428065,
        8171396893523,
        115094557122380,
        1642269376265063,
        23679803216530017,
        344396036645439675,
        5045351124912000756,
        74375422235109338507,
        1102368908826371717478,
        16417712341047912048640,
        245566461812077209025580,
        3687384661929075391318298,
        55566472746158319169779382,
        840092106663809502446963972,
        12739517442131428048314937036,
    ),
    7: (
        1,
        1,
        1,
        2,
        5,
        15,
        64,
        342,
        2344,
        19137,
        181098,
        1922215,
        22472875,
        284556458,
        3849828695,
        54974808527,
        819865209740,
        12655913153775,
        200748351368185,
        3253193955012557,
        53619437319817482,
        895778170144927928,
        15129118461773051724,
        257812223121779545108,
        4426056869082751747930,
        76463433541541506345648,
        1328088941166844504424628,
        23175796698013212039339479,
        406103563562864890670029228,
        7142350290468621849814034057,
        126034923903699365819345698783,
    ),
    8: (
        1,
        1,
        1,
        2,
        5,
        15,
        64,
        342,
        2344,
        19137,
        181204,
        1926782,
        22638677,
        289742922,
        3996857019,
        58854922207,
        916955507587,
        14988769972628,
        255067524402905,
        4487202163529135,
        81112295567987808,
        1498874117898285574,
        28195965395340358096,
        538126404726276758908,
        10391826059632904271057,
        202624626664206041379718,
        3982593421723767068438772,
        78804180647706388187446055,
        1568191570016583843925943321,
        31359266621157738864915907470,
        629755261439815181073415721542,
    ),
    9: (
        1,
        1,
        1,
        2,
        5,
        15,
        64,
        342,
        2344,
        19137,
        181204,
        1927017,
        22652254,
        290351000,
        4019973352,
        59642496465,
        941751344429,
        15724551551655,
        275926445572426,
        5057692869843759,
        96275031338911591,
        1892687812366295682,
        38234411627616084843,
        790120238796588845615,
        16638524087850961727575,
        355878246778832856290372,
        7710423952280397990026132,
        168843592748278228259801752,
        3730285520855433827693340329,
        83027821492843727307516904184,
        1859625249087075723295908757282,
    ),
    10: (
        1,
        1,
        1,
        2,
        5,
        15,
        64,
        342,
        2344,
        19137,
        181204,
        1927017,
        22652805,
        290391147,
        4022154893,
        59741455314,
        945737514583,
        15871943695637,
        281035862707569,
        5226147900656616,
        101612006684523937,
        2056425123910104429,
        43127730369661586804,
        933229734601789336024,
        20749443766669472108394,
        472211306357077710523863,
        10961384502758318928846970,
        258737420965101611169934566,
        6193917223279376307682721853,
        150039339181032274342778699887,
        3670778410024403632885217999313,
    ),
}
