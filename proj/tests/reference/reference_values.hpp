#pragma once

// Generated by make_reference.py. Do not edit by hand.

namespace ref {

inline constexpr double kBlockW2_re[] = {0.5369865297409037, -0.1482309487544069, -0.3490969419728343, -0.015386963882398642, 0.06631735981603937, 0.8899696604455262, -0.3353517668534116, 0.1648310313633945, -0.111203347477346, -0.15975605758040828, -0.6241788230805134, 0.15074519204640696, -0.015386963882398408, -0.1693991473492839, -0.5580216911373204, -0.2901474958326413};
inline constexpr double kBlockW2_im[] = {-0.7209320216269457, 0.08159799818622811, -0.11502350706989337, 0.16714065592223531, 0.011916234328355358, -0.13665474000977904, -0.17909253211185266, -0.11417217338535685, 0.3831756205793473, 0.01618123879235643, 0.08467371283517558, 0.6289145213209809, 0.1671406559222353, 0.32583575079715993, 0.11049401218796584, -0.6551179519850235};
inline constexpr double kStaircase3k1_re[] = {0.07013190749038381, 0.38296788771585416, 0.19887710916034881, 0.3856873216611997, 0.002538784339573351, -0.07125406720460634, -0.1635905338243513, -0.10519821020565731};
inline constexpr double kStaircase3k1_im[] = {-0.13449286247033368, 0.08438709858643412, 0.4652061967132099, -0.405853849361838, 0.15246789943473815, -0.059840125497194724, 0.3947393210161202, -0.16795263226933346};
inline constexpr double kProduct3_re[] = {-0.23826099912590182, 0.24054061140552838, 0.49735752033780983, -0.38608656616092, -0.045693066400370436, 0.11383649324498601, 0.15335231235210967, -0.2739010008014128};
inline constexpr double kProduct3_im[] = {0.0, 0.17968920011134973, 0.15385071005643997, -0.5304146265005628, 0.08977589347943175, -0.05617452207455183, -0.15789745361056295, 0.04375452015785283};
inline constexpr double kProbeOracle_re[] = {-0.6110083258985932, -0.3679014409654561, -0.1089432748447214, -0.03420100361995213, -0.09313055418669819, -0.07737500145240161, -0.15147198686819727, 0.06478513653227985, -0.34819611828124086, -0.1285746453570935, -0.07065439325249866, 0.02594563837092693, -0.09241514199058073, 0.01566083061020116, 0.04485659811641783, 0.030140381217335605, -0.3679014409654561, 0.36596462736861013, -0.15632012341124452, -0.35842989482873755, -0.07379758343248781, 0.16160534891519368, -0.004013465124877269, -0.08613903532525995, -0.12856920126685475, 0.02600256841985603, -0.049349185294003874, -0.19960866152567383, 0.014716461494795276, -0.14505812338449875, 0.06595857758079277, 0.07764451614681539, -0.10894327484472137, -0.15632012341124457, 0.09387094887507008, 0.010001218503612795, -0.09311577232441962, -0.07234107533642727, 0.38271418004179647, -0.16803252706011018, -0.06718971994737952, -0.04826374564524595, 0.20960553511881075, -0.06076843256943194, -0.036480138329528414, 0.06534597321202049, -0.1087359861341796, 0.04534566059790815, -0.03420100361995211, -0.35842989482873766, 0.010001218503612798, 0.01150675717066213, -0.008516342631712045, -0.12589189540471563, -0.1644350647970284, -0.40381722655804053, 0.02498266711479043, -0.1963394721611154, -0.060782209403742474, -0.12798137257547304, 0.06935348837481302, 0.023815162006845168, 0.04425491134759849, 0.10346448837492805, -0.09313055418669819, -0.0737975834324878, -0.09311577232441953, -0.008516342631712064, -0.012056979726202677, 0.2516244655211347, 0.381800668694834, -0.11450618007439363, -0.1789950365753576, -0.06267992789186558, -0.09192513726419961, 0.06527829744643149, 0.11744347159102762, -0.05018523641128926, -0.1876889713601792, 0.039070787519021634, -0.07737500145240164, 0.1616053489151938, -0.07234107533642725, -0.12589189540471563, 0.2516244655211347, -0.719397075600404, 0.009305126607466225, 0.07495622276997746, -0.06378725476416058, -0.012932460626476294, 0.028720431951667586, -0.040416521811105915, -0.050202782081682, 0.2971155605484351, -0.024393464752313045, -0.03103050457635581, -0.15147198686819727, -0.004013465124877287, 0.3827141800417963, -0.16443506479702838, 0.3818006686948341, 0.009305126607466243, 0.20531838222572651, -0.09584607220830643, -0.03246021579173976, 0.06867861127126484, 0.02593242281675788, -0.010597666991878467, -0.18416892392906564, -0.023404176119590874, -0.03627100057134479, 0.010554795972113337, 0.06478513653227985, -0.08613903532525995, -0.16803252706011015, -0.4038172265580404, -0.11450618007439367, 0.07495622276997749, -0.09584607220830649, -0.08263005975059295, 0.06558623382657854, 0.03320857820760255, -0.011559068082908783, -0.04046270579921126, 0.038011209964493135, -0.02781375494642964, 0.010579027324046881, -0.053028957859227455, -0.34819611828124086, -0.12856920126685467, -0.06718971994737952, 0.024982667114790427, -0.17899503657535765, -0.06378725476416058, -0.03246021579173976, 0.06558623382657852, 0.5457061493246512, 0.10689601053594344, 0.18122117007326316, -0.12927051009452678, -0.23774992168861403, -0.21532610483246173, -0.13617185752714106, 0.06453819240941958, -0.1285746453570935, 0.026002568419856, -0.048263745645245944, -0.1963394721611153, -0.06267992789186558, -0.012932460626476253, 0.06867861127126484, 0.03320857820760252, 0.10689601053594347, 0.1504006333750454, 0.013171330708285557, 0.3040738040194877, -0.21188101017929747, 0.3181108272211341, 0.007259571301422639, -0.09213977962760651, -0.07065439325249864, -0.04934918529400385, 0.20960553511881075, -0.06078220940374249, -0.09192513726419965, 0.028720431951667583, 0.025932422816757873, -0.011559068082908776, 0.18122117007326316, 0.013171330708285515, -0.6836027432194375, 0.2533615290597205, -0.11806538874755279, -0.062465141998728387, 0.10433945182174872, -0.03469132808368458, 0.02594563837092692, -0.1996086615256738, -0.06076843256943189, -0.1279813725754731, 0.06527829744643152, -0.0404165218111059, -0.010597666991878455, -0.04046270579921124, -0.12927051009452684, 0.3040738040194877, 0.25336152905972054, 0.553298595982758, -0.001064623667050992, -0.12127135905333247, -0.03126464405858945, -0.11120975046694304, -0.09241514199058076, 0.01471646149479526, -0.0364801383295284, 0.069353488374813, 0.11744347159102764, -0.050202782081682, -0.18416892392906564, 0.03801120996449312, -0.23774992168861397, -0.2118810101792975, -0.11806538874755278, -0.0010646236670510004, 0.3186997304628152, -0.006644963813838558, -0.35112121814618646, 0.04184672881899715, 0.015660830610201158, -0.1450581233844987, 0.06534597321202046, 0.023815162006845154, -0.050185236411289316, 0.297115560548435, -0.023404176119590878, -0.027813754946429625, -0.21532610483246176, 0.31811082722113404, -0.06246514199872838, -0.12127135905333244, -0.006644963813838582, 0.4741583838225254, -0.09467945999231811, -0.09776009939152996, 0.04485659811641782, 0.0659585775807928, -0.10873598613417958, 0.04425491134759847, -0.1876889713601793, -0.02439346475231308, -0.036271000571344775, 0.010579027324046869, -0.136171857527141, 0.007259571301422645, 0.10433945182174875, -0.03126464405858945, -0.35112121814618646, -0.09467945999231814, 0.21351152187519207, -0.11394760470292534, 0.0301403812173356, 0.07764451614681539, 0.04534566059790816, 0.10346448837492808, 0.03907078751902168, -0.031030504576355835, 0.010554795972113375, -0.053028957859227406, 0.0645381924094196, -0.09213977962760651, -0.03469132808368459, -0.111209750466943, 0.04184672881899717, -0.09776009939153002, -0.11394760470292527, -0.41333670527177047};
inline constexpr double kProbeOracle_im[] = {0.3341954831368601, -0.10010301651616571, 0.13200903822155954, -0.195151393652696, 0.11843091991804042, 0.0306529084493896, 0.026649997062534778, -0.07474620878326427, -0.01488617162020205, -0.13907747700627265, 0.04523591094039611, -0.09923074532940523, -0.1643793884861187, -0.1080563534919455, -0.09509411760344533, 0.06047444770145677, -0.10010301651616578, 0.48879576257246066, -0.11562259874320273, 0.11165379452973338, 0.030243674963268692, 0.04162214528874277, -0.10261933127898905, -0.11341159363144131, -0.13922361266085898, 0.2961880768890996, -0.08797256287643818, -0.033804845797584845, -0.1058624514966939, 0.1323887338320915, 0.025242485544484435, -0.038843928757197096, 0.13200903822155954, -0.11562259874320276, -0.6338313937914254, 0.2541030941907336, 0.13538450456156909, -0.06497320962409403, 0.09044870364971522, -0.028533590236032674, 0.04394600931592686, -0.08586572676691556, -0.3160072720447534, 0.14150229350160462, -0.10275537801935328, -0.02763669292971726, 0.14016305850069238, -0.05844627400614413, -0.19515139365269601, 0.11165379452973348, 0.2541030941907335, 0.5471185487845622, -0.10176961041341909, -0.009516584736585083, -0.028696059230012654, -0.029014025517929927, -0.09706850409755491, -0.03275350009774924, 0.14135702298893593, 0.3057061164104701, 0.02531136772282839, -0.08916600175713627, -0.05632387716058218, -0.15666036275298317, 0.11843091991804044, 0.03024367496326876, 0.13538450456156897, -0.10176961041341903, -0.6148753406335918, -0.3134878870630217, 0.05270849572025568, 0.11999374767650337, -0.05395784488982925, -0.0860701638039024, -0.048486777137441865, -0.027230549369635867, 0.2543954575330573, 0.1797709317879616, 0.029719518029923356, -0.06759964561193084, 0.030652908449389584, 0.04162214528874278, -0.06497320962409403, -0.009516584736585072, -0.31348788706302166, 0.06404296541869242, 0.17228263614123912, 0.05977553393139987, -0.08818542929477358, 0.19616739265763544, -0.06197987900585102, -0.07889726832675345, 0.17962624026520463, -0.15345806952840757, -0.07664908511812557, -0.024148135001142105, 0.026649997062534753, -0.10261933127898905, 0.09044870364971519, -0.028696059230012613, 0.05270849572025587, 0.17228263614123912, -0.5177677432069271, 0.2602749937019925, -0.10429238709348812, -0.027375001063769097, 0.17822073623406598, -0.07110722459220095, 0.028588911427748873, -0.07449401124828012, 0.31138831445787774, -0.15354669426136655, -0.07474620878326427, -0.11341159363144132, -0.02853359023603267, -0.029014025517929896, 0.11999374767650334, 0.05977553393139985, 0.2602749937019926, 0.6623602991259958, 0.02555245526685867, -0.08596711188721734, -0.07329479799807881, -0.1826765859525054, -0.06548474886268514, -0.022946361357637706, -0.15369001108156652, -0.3609088036357939, -0.014886171620202126, -0.13922361266085892, 0.04394600931592685, -0.09706850409755485, -0.05395784488982927, -0.08818542929477356, -0.10429238709348812, 0.025552455266858648, 0.2711090059819162, 0.3068078605079766, -0.03185858273642467, 0.15409140118572473, 0.27926340277457723, 0.03442458930351802, -0.052804879250514775, -0.061051457579146276, -0.13907747700627263, 0.29618807688909954, -0.0858657267669155, -0.032753500097749244, -0.08607016380390242, 0.19616739265763544, -0.027375001063769097, -0.08596711188721733, 0.30680786050797665, -0.48942694801556225, 0.1984621259289447, 0.23232525055858433, 0.03455867505124478, 0.2017800376352043, -0.09460995175492291, -0.056996825659567686, 0.04523591094039609, -0.08797256287643818, -0.3160072720447533, 0.14135702298893588, -0.048486777137441886, -0.06197987900585103, 0.178220736234066, -0.07329479799807881, -0.03185858273642465, 0.1984621259289447, 0.30132205283472335, -0.16470645823893754, 0.05981806205283493, -0.06796091484886227, 0.025601948763441486, -0.016695128068939562, -0.09923074532940523, -0.03380484579758487, 0.1415022935016046, 0.30570611641046996, -0.027230549369635863, -0.07889726832675348, -0.07110722459220095, -0.18267658595250547, 0.15409140118572473, 0.23232525055858438, -0.1647064582389376, -0.3685530117610313, -0.09553678277278838, 0.0417952464478951, -0.016322594944696327, -0.050295262867391104, -0.16437938848611866, -0.10586245149669388, -0.10275537801935325, 0.025311367722828382, 0.25439545753305737, 0.17962624026520468, 0.028588911427748845, -0.06548474886268514, 0.2792634027745772, 0.03455867505124477, 0.059818062052834964, -0.09553678277278838, 0.40840522391441775, 0.34795986005778756, 0.18015699689730147, -0.16638956561759632, -0.10805635349194552, 0.1323887338320915, -0.027636692929717245, -0.08916600175713621, 0.1797709317879616, -0.15345806952840757, -0.07449401124828009, -0.022946361357637668, 0.03442458930351805, 0.2017800376352043, -0.06796091484886227, 0.041795246447895104, 0.34795986005778756, -0.42341625673215216, -0.1464850308808945, -0.04750599604952818, -0.09509411760344533, 0.025242485544484418, 0.14016305850069236, -0.05632387716058218, 0.029719518029923384, -0.07664908511812557, 0.31138831445787785, -0.15369001108156655, -0.052804879250514754, -0.09460995175492291, 0.025601948763441452, -0.016322594944696324, 0.18015699689730144, -0.14648503088089454, 0.6351107715518673, -0.30256120066256065, 0.06047444770145678, -0.03884392875719708, -0.0584462740061441, -0.15666036275298312, -0.06759964561193087, -0.02414813500114211, -0.15354669426136658, -0.36090880363579403, -0.06105145757914628, -0.05699682565956772, -0.016695128068939556, -0.050295262867391145, -0.16638956561759632, -0.04750599604952819, -0.30256120066256076, -0.6558540136118174};
inline constexpr double kProbeProbs[] = {0.2299525559442695, 0.4573240873803792, 0.6105562474595576, 0.5493714677929037};
inline constexpr double kProbeCertificate = 0.032481407127932765;
inline constexpr double kTfim4Diagonal[] = {-3.0, -1.0, 1.0, -1.0, 1.0, 3.0, 1.0, -1.0, -1.0, 1.0, 3.0, 1.0, -1.0, 1.0, -1.0, -3.0};
inline constexpr double kTfim4GroundEnergy = -4.7587704831436355;
inline constexpr double kTfim4Ground_re[] = {0.4798975402619686, 0.25534814770632563, 0.16666666666666655, 0.22454939255564357, 0.16666666666666669, 0.10878394077768994, 0.14656420692863625, 0.25534814770632636, 0.25534814770632575, 0.14656420692863611, 0.10878394077768995, 0.16666666666666682, 0.22454939255564357, 0.16666666666666685, 0.25534814770632636, 0.4798975402619704};
inline constexpr double kTfim4Ground_im[] = {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
inline constexpr double kFormula4Cut1[] = {0.8854435268889163, 0.4647469856712537};
inline constexpr double kFormula4Ebits1 = 0.7527770226653092;
inline constexpr double kFormula4Cut2[] = {0.8165780234664778, 0.4253419676875106, 0.37024181862421207, 0.1233107369904704};
inline constexpr double kFormula4Ebits2 = 1.320934346151751;
inline constexpr double kFormula4Cut3[] = {0.8714793317556069, 0.49043223214099685};
inline constexpr double kFormula4Ebits3 = 0.7959102133512619;
inline constexpr double kFormula5TruncR2Infidelity = 0.22628220459538273;

}  // namespace ref

