//! Embedded symmetric interior rule data. Coordinates are reference-simplex
//! coordinates with the weight in the last slot; weights sum to the reference
//! measure. Every table is verified by the monomial sweep in the unit tests.

pub(super) const TRI_D1: (u32, &[[f64; 3]]) = (1, &[
    [0.3333333333333333, 0.3333333333333333, 0.5],
]);

pub(super) const TRI_D2: (u32, &[[f64; 3]]) = (2, &[
    [0.16666666666666666, 0.6666666666666667, 0.16666666666666666],
    [0.6666666666666667, 0.16666666666666666, 0.16666666666666666],
    [0.16666666666666666, 0.16666666666666666, 0.16666666666666666],
]);

pub(super) const TRI_D4: (u32, &[[f64; 3]]) = (4, &[
    [0.44594849091596483, 0.44594849091596483, 0.11169079483900558],
    [0.10810301816807033, 0.44594849091596483, 0.11169079483900558],
    [0.44594849091596483, 0.10810301816807033, 0.11169079483900558],
    [0.09157621350977092, 0.8168475729804582, 0.05497587182766108],
    [0.8168475729804582, 0.09157621350977092, 0.05497587182766108],
    [0.09157621350977092, 0.09157621350977092, 0.05497587182766108],
]);

pub(super) const TRI_D5: (u32, &[[f64; 3]]) = (5, &[
    [0.3333333333333333, 0.3333333333333333, 0.11249999999999932],
    [0.4701420641051148, 0.4701420641051148, 0.06619707639425326],
    [0.05971587178977045, 0.4701420641051148, 0.06619707639425326],
    [0.4701420641051148, 0.05971587178977045, 0.06619707639425326],
    [0.10128650732345637, 0.7974269853530873, 0.06296959027241363],
    [0.7974269853530873, 0.10128650732345637, 0.06296959027241363],
    [0.10128650732345637, 0.10128650732345637, 0.06296959027241363],
]);

pub(super) const TRI_D6: (u32, &[[f64; 3]]) = (6, &[
    [0.24928674517093952, 0.501426509658121, 0.058393137863165114],
    [0.501426509658121, 0.24928674517093952, 0.058393137863165114],
    [0.24928674517093952, 0.24928674517093952, 0.058393137863165114],
    [0.06308901449149604, 0.8738219710170079, 0.025422453185099034],
    [0.8738219710170079, 0.06308901449149604, 0.025422453185099034],
    [0.06308901449149604, 0.06308901449149604, 0.025422453185099034],
    [0.3103524510337619, 0.6365024991214006, 0.04142553780920125],
    [0.6365024991214006, 0.3103524510337619, 0.04142553780920125],
    [0.053145049844837644, 0.6365024991214006, 0.04142553780920125],
    [0.6365024991214006, 0.053145049844837644, 0.04142553780920125],
    [0.053145049844837644, 0.3103524510337619, 0.04142553780920125],
    [0.3103524510337619, 0.053145049844837644, 0.04142553780920125],
]);

pub(super) const TRI_D8: (u32, &[[f64; 3]]) = (8, &[
    [0.3333333333333333, 0.3333333333333333, 0.07215780383886479],
    [0.4592925882926806, 0.4592925882926806, 0.047545817133662155],
    [0.08141482341463879, 0.4592925882926806, 0.047545817133662155],
    [0.4592925882926806, 0.08141482341463879, 0.047545817133662155],
    [0.17056930775170925, 0.6588613844965815, 0.05160868526736421],
    [0.6588613844965815, 0.17056930775170925, 0.05160868526736421],
    [0.17056930775170925, 0.17056930775170925, 0.05160868526736421],
    [0.050547228317031845, 0.8989055433659363, 0.016229248811601742],
    [0.8989055433659363, 0.050547228317031845, 0.016229248811601742],
    [0.050547228317031845, 0.050547228317031845, 0.016229248811601742],
    [0.2631128296347879, 0.7284923929553201, 0.01361515708720849],
    [0.7284923929553201, 0.2631128296347879, 0.01361515708720849],
    [0.00839477740989202, 0.7284923929553201, 0.01361515708720849],
    [0.7284923929553201, 0.00839477740989202, 0.01361515708720849],
    [0.00839477740989202, 0.2631128296347879, 0.01361515708720849],
    [0.2631128296347879, 0.00839477740989202, 0.01361515708720849],
]);

pub(super) const TRI_D9: (u32, &[[f64; 3]]) = (9, &[
    [0.3333333333333333, 0.3333333333333333, 0.04856789813937623],
    [0.4896825191969682, 0.4896825191969682, 0.015667350115187086],
    [0.020634961606063595, 0.4896825191969682, 0.015667350115187086],
    [0.4896825191969682, 0.020634961606063595, 0.015667350115187086],
    [0.43708959149011056, 0.43708959149011056, 0.03891377050175945],
    [0.12582081701977887, 0.43708959149011056, 0.03891377050175945],
    [0.43708959149011056, 0.12582081701977887, 0.03891377050175945],
    [0.188203535618104, 0.623592928763792, 0.03982386946358765],
    [0.623592928763792, 0.188203535618104, 0.03982386946358765],
    [0.188203535618104, 0.188203535618104, 0.03982386946358765],
    [0.044729513394540045, 0.9105409732109199, 0.012788837829398686],
    [0.9105409732109199, 0.044729513394540045, 0.012788837829398686],
    [0.044729513394540045, 0.044729513394540045, 0.012788837829398686],
    [0.22196298916125118, 0.7411985987843996, 0.02164176968847086],
    [0.7411985987843996, 0.22196298916125118, 0.02164176968847086],
    [0.036838412054349234, 0.7411985987843996, 0.02164176968847086],
    [0.7411985987843996, 0.036838412054349234, 0.02164176968847086],
    [0.036838412054349234, 0.22196298916125118, 0.02164176968847086],
    [0.22196298916125118, 0.036838412054349234, 0.02164176968847086],
]);

pub(super) const TRI_D10: (u32, &[[f64; 3]]) = (10, &[
    [0.3333333333333333, 0.3333333333333333, 0.045408995193008825],
    [0.4855776333843528, 0.4855776333843528, 0.018362978877769796],
    [0.02884473323129444, 0.4855776333843528, 0.018362978877769796],
    [0.4855776333843528, 0.02884473323129444, 0.018362978877769796],
    [0.10948157548419243, 0.7810368490316151, 0.022660529717591173],
    [0.7810368490316151, 0.10948157548419243, 0.022660529717591173],
    [0.10948157548419243, 0.10948157548419243, 0.022660529717591173],
    [0.3079398387641528, 0.5503529418235023, 0.03637895842322091],
    [0.5503529418235023, 0.3079398387641528, 0.03637895842322091],
    [0.14170721941234501, 0.5503529418235023, 0.03637895842322091],
    [0.5503529418235023, 0.14170721941234501, 0.03637895842322091],
    [0.14170721941234501, 0.3079398387641528, 0.03637895842322091],
    [0.3079398387641528, 0.14170721941234501, 0.03637895842322091],
    [0.24667256063797077, 0.7283239046002061, 0.014163621265168343],
    [0.7283239046002061, 0.24667256063797077, 0.014163621265168343],
    [0.02500353476182319, 0.7283239046002061, 0.014163621265168343],
    [0.7283239046002061, 0.02500353476182319, 0.014163621265168343],
    [0.02500353476182319, 0.24667256063797077, 0.014163621265168343],
    [0.24667256063797077, 0.02500353476182319, 0.014163621265168343],
    [0.06680325101125331, 0.9236559335883961, 0.0047108334817621235],
    [0.9236559335883961, 0.06680325101125331, 0.0047108334817621235],
    [0.009540815400350582, 0.9236559335883961, 0.0047108334817621235],
    [0.9236559335883961, 0.009540815400350582, 0.0047108334817621235],
    [0.009540815400350582, 0.06680325101125331, 0.0047108334817621235],
    [0.06680325101125331, 0.009540815400350582, 0.0047108334817621235],
]);

pub(super) const TRI_D13: (u32, &[[f64; 3]]) = (13, &[
    [0.02487403237606083, 0.0224793864387125, 0.0006039110132876303],
    [0.0224793864387125, 0.02487403237606083, 0.0006039110132876303],
    [0.9526465811852267, 0.0224793864387125, 0.0006039110132876303],
    [0.0224793864387125, 0.9526465811852267, 0.0006039110132876303],
    [0.9526465811852267, 0.02487403237606083, 0.0006039110132876303],
    [0.02487403237606083, 0.9526465811852267, 0.0006039110132876303],
    [0.02252791561566371, 0.11467905316090415, 0.0011924406298493568],
    [0.11467905316090415, 0.02252791561566371, 0.0011924406298493568],
    [0.8627930312234322, 0.11467905316090415, 0.0011924406298493568],
    [0.11467905316090415, 0.8627930312234322, 0.0011924406298493568],
    [0.8627930312234322, 0.02252791561566371, 0.0011924406298493568],
    [0.02252791561566371, 0.8627930312234322, 0.0011924406298493568],
    [0.01868274434884279, 0.2657898227845895, 0.0013746005022549337],
    [0.2657898227845895, 0.01868274434884279, 0.0013746005022549337],
    [0.7155274328665677, 0.2657898227845895, 0.0013746005022549337],
    [0.2657898227845895, 0.7155274328665677, 0.0013746005022549337],
    [0.7155274328665677, 0.01868274434884279, 0.0013746005022549337],
    [0.01868274434884279, 0.7155274328665677, 0.0013746005022549337],
    [0.013922895156596128, 0.45284637366944464, 0.0011559237922890158],
    [0.45284637366944464, 0.013922895156596128, 0.0011559237922890158],
    [0.5332307311739592, 0.45284637366944464, 0.0011559237922890158],
    [0.45284637366944464, 0.5332307311739592, 0.0011559237922890158],
    [0.5332307311739592, 0.013922895156596128, 0.0011559237922890158],
    [0.013922895156596128, 0.5332307311739592, 0.0011559237922890158],
    [0.008972904006716732, 0.6473752828868303, 0.000716318347997073],
    [0.6473752828868303, 0.008972904006716732, 0.000716318347997073],
    [0.343651813106453, 0.6473752828868303, 0.000716318347997073],
    [0.6473752828868303, 0.343651813106453, 0.000716318347997073],
    [0.343651813106453, 0.008972904006716732, 0.000716318347997073],
    [0.008972904006716732, 0.343651813106453, 0.000716318347997073],
    [0.004586412541637897, 0.8197593082631076, 0.00029574751190634225],
    [0.8197593082631076, 0.004586412541637897, 0.00029574751190634225],
    [0.17565427919525445, 0.8197593082631076, 0.00029574751190634225],
    [0.8197593082631076, 0.17565427919525445, 0.00029574751190634225],
    [0.17565427919525445, 0.004586412541637897, 0.00029574751190634225],
    [0.004586412541637897, 0.17565427919525445, 0.00029574751190634225],
    [0.0014316595813329523, 0.9437374394630779, 5.626512611856242e-05],
    [0.9437374394630779, 0.0014316595813329523, 5.626512611856242e-05],
    [0.05483090095558918, 0.9437374394630779, 5.626512611856242e-05],
    [0.9437374394630779, 0.05483090095558918, 5.626512611856242e-05],
    [0.05483090095558918, 0.0014316595813329523, 5.626512611856242e-05],
    [0.0014316595813329523, 0.05483090095558918, 5.626512611856242e-05],
    [0.12632929701966925, 0.0224793864387125, 0.001304531108082511],
    [0.0224793864387125, 0.12632929701966925, 0.001304531108082511],
    [0.8511913165416183, 0.0224793864387125, 0.001304531108082511],
    [0.0224793864387125, 0.8511913165416183, 0.001304531108082511],
    [0.8511913165416183, 0.12632929701966925, 0.001304531108082511],
    [0.12632929701966925, 0.8511913165416183, 0.001304531108082511],
    [0.11441392774676132, 0.11467905316090415, 0.002575836277122339],
    [0.11467905316090415, 0.11441392774676132, 0.002575836277122339],
    [0.7709070190923346, 0.11467905316090415, 0.002575836277122339],
    [0.11467905316090415, 0.7709070190923346, 0.002575836277122339],
    [0.7709070190923346, 0.11441392774676132, 0.002575836277122339],
    [0.11441392774676132, 0.7709070190923346, 0.002575836277122339],
    [0.09488521701286282, 0.2657898227845895, 0.0029693267334459698],
    [0.2657898227845895, 0.09488521701286282, 0.0029693267334459698],
    [0.6393249602025477, 0.2657898227845895, 0.0029693267334459698],
    [0.2657898227845895, 0.6393249602025477, 0.0029693267334459698],
    [0.6393249602025477, 0.09488521701286282, 0.0029693267334459698],
    [0.09488521701286282, 0.6393249602025477, 0.0029693267334459698],
    [0.0707110745463253, 0.45284637366944464, 0.002496954869898238],
    [0.45284637366944464, 0.0707110745463253, 0.002496954869898238],
    [0.47644255178423006, 0.45284637366944464, 0.002496954869898238],
    [0.45284637366944464, 0.47644255178423006, 0.002496954869898238],
    [0.47644255178423006, 0.0707110745463253, 0.002496954869898238],
    [0.0707110745463253, 0.47644255178423006, 0.002496954869898238],
    [0.04557124628029494, 0.6473752828868303, 0.0015473464594814264],
    [0.6473752828868303, 0.04557124628029494, 0.0015473464594814264],
    [0.3070534708328747, 0.6473752828868303, 0.0015473464594814264],
    [0.6473752828868303, 0.3070534708328747, 0.0015473464594814264],
    [0.3070534708328747, 0.04557124628029494, 0.0015473464594814264],
    [0.04557124628029494, 0.3070534708328747, 0.0015473464594814264],
    [0.0232932989499898, 0.8197593082631076, 0.0006388554289141141],
    [0.8197593082631076, 0.0232932989499898, 0.0006388554289141141],
    [0.15694739278690262, 0.8197593082631076, 0.0006388554289141141],
    [0.8197593082631076, 0.15694739278690262, 0.0006388554289141141],
    [0.15694739278690262, 0.0232932989499898, 0.0006388554289141141],
    [0.0232932989499898, 0.15694739278690262, 0.0006388554289141141],
    [0.0072710586585602805, 0.9437374394630779, 0.000121540435108594],
    [0.9437374394630779, 0.0072710586585602805, 0.000121540435108594],
    [0.048991501878361876, 0.9437374394630779, 0.000121540435108594],
    [0.9437374394630779, 0.048991501878361876, 0.000121540435108594],
    [0.048991501878361876, 0.0072710586585602805, 0.000121540435108594],
    [0.0072710586585602805, 0.048991501878361876, 0.000121540435108594],
    [0.2903993060879903, 0.0224793864387125, 0.0017808351002191545],
    [0.0224793864387125, 0.2903993060879903, 0.0017808351002191545],
    [0.6871213074732971, 0.0224793864387125, 0.0017808351002191545],
    [0.0224793864387125, 0.6871213074732971, 0.0017808351002191545],
    [0.6871213074732971, 0.2903993060879903, 0.0017808351002191545],
    [0.2903993060879903, 0.6871213074732971, 0.0017808351002191545],
    [0.2630088665758012, 0.11467905316090415, 0.003516312969692065],
    [0.11467905316090415, 0.2630088665758012, 0.003516312969692065],
    [0.6223120802632947, 0.11467905316090415, 0.003516312969692065],
    [0.11467905316090415, 0.6223120802632947, 0.003516312969692065],
    [0.6223120802632947, 0.2630088665758012, 0.003516312969692065],
    [0.2630088665758012, 0.6223120802632947, 0.003516312969692065],
    [0.2181172683502983, 0.2657898227845895, 0.0040534727291495235],
    [0.2657898227845895, 0.2181172683502983, 0.0040534727291495235],
    [0.5160929088651122, 0.2657898227845895, 0.0040534727291495235],
    [0.2657898227845895, 0.5160929088651122, 0.0040534727291495235],
    [0.5160929088651122, 0.2181172683502983, 0.0040534727291495235],
    [0.2181172683502983, 0.5160929088651122, 0.0040534727291495235],
    [0.16254699001286968, 0.45284637366944464, 0.003408630770418305],
    [0.45284637366944464, 0.16254699001286968, 0.003408630770418305],
    [0.3846066363176857, 0.45284637366944464, 0.003408630770418305],
    [0.45284637366944464, 0.3846066363176857, 0.003408630770418305],
    [0.3846066363176857, 0.16254699001286968, 0.003408630770418305],
    [0.16254699001286968, 0.3846066363176857, 0.003408630770418305],
    [0.10475684270848173, 0.6473752828868303, 0.002112306000348802],
    [0.6473752828868303, 0.10475684270848173, 0.002112306000348802],
    [0.24786787440468794, 0.6473752828868303, 0.002112306000348802],
    [0.6473752828868303, 0.24786787440468794, 0.002112306000348802],
    [0.24786787440468794, 0.10475684270848173, 0.002112306000348802],
    [0.10475684270848173, 0.24786787440468794, 0.002112306000348802],
    [0.05354544045728326, 0.8197593082631076, 0.0008721111859479386],
    [0.8197593082631076, 0.05354544045728326, 0.0008721111859479386],
    [0.12669525127960912, 0.8197593082631076, 0.0008721111859479386],
    [0.8197593082631076, 0.12669525127960912, 0.0008721111859479386],
    [0.12669525127960912, 0.05354544045728326, 0.0008721111859479386],
    [0.05354544045728326, 0.12669525127960912, 0.0008721111859479386],
    [0.0167143365694675, 0.9437374394630779, 0.00016591668193749402],
    [0.9437374394630779, 0.0167143365694675, 0.00016591668193749402],
    [0.03954822396745461, 0.9437374394630779, 0.00016591668193749402],
    [0.9437374394630779, 0.03954822396745461, 0.00016591668193749402],
    [0.03954822396745461, 0.0167143365694675, 0.00016591668193749402],
    [0.0167143365694675, 0.03954822396745461, 0.00016591668193749402],
    [0.48876030678064375, 0.0224793864387125, 0.0019493394607365516],
    [0.0224793864387125, 0.48876030678064375, 0.0019493394607365516],
    [0.48876030678064375, 0.0224793864387125, 0.0019493394607365516],
    [0.0224793864387125, 0.48876030678064375, 0.0019493394607365516],
    [0.48876030678064375, 0.48876030678064375, 0.0019493394607365516],
    [0.48876030678064375, 0.48876030678064375, 0.0019493394607365516],
    [0.44266047341954795, 0.11467905316090415, 0.003849029945151541],
    [0.11467905316090415, 0.44266047341954795, 0.003849029945151541],
    [0.4426604734195479, 0.11467905316090415, 0.003849029945151541],
    [0.11467905316090415, 0.4426604734195479, 0.003849029945151541],
    [0.4426604734195479, 0.44266047341954795, 0.003849029945151541],
    [0.44266047341954795, 0.4426604734195479, 0.003849029945151541],
    [0.36710508860770524, 0.2657898227845895, 0.00443701628689723],
    [0.2657898227845895, 0.36710508860770524, 0.00443701628689723],
    [0.3671050886077053, 0.2657898227845895, 0.00443701628689723],
    [0.2657898227845895, 0.3671050886077053, 0.00443701628689723],
    [0.3671050886077053, 0.36710508860770524, 0.00443701628689723],
    [0.36710508860770524, 0.3671050886077053, 0.00443701628689723],
    [0.2735768131652777, 0.45284637366944464, 0.0037311587507678472],
    [0.45284637366944464, 0.2735768131652777, 0.0037311587507678472],
    [0.27357681316527765, 0.45284637366944464, 0.0037311587507678472],
    [0.45284637366944464, 0.27357681316527765, 0.0037311587507678472],
    [0.27357681316527765, 0.2735768131652777, 0.0037311587507678472],
    [0.2735768131652777, 0.27357681316527765, 0.0037311587507678472],
    [0.17631235855658484, 0.6473752828868303, 0.002312174461927324],
    [0.6473752828868303, 0.17631235855658484, 0.002312174461927324],
    [0.17631235855658478, 0.6473752828868303, 0.002312174461927324],
    [0.6473752828868303, 0.17631235855658478, 0.002312174461927324],
    [0.17631235855658478, 0.17631235855658484, 0.002312174461927324],
    [0.17631235855658484, 0.17631235855658478, 0.002312174461927324],
    [0.0901203458684462, 0.8197593082631076, 0.0009546312001087903],
    [0.8197593082631076, 0.0901203458684462, 0.0009546312001087903],
    [0.0901203458684462, 0.8197593082631076, 0.0009546312001087903],
    [0.8197593082631076, 0.0901203458684462, 0.0009546312001087903],
    [0.0901203458684462, 0.0901203458684462, 0.0009546312001087903],
    [0.0901203458684462, 0.0901203458684462, 0.0009546312001087903],
    [0.028131280268461067, 0.9437374394630779, 0.0001816158808052641],
    [0.9437374394630779, 0.028131280268461067, 0.0001816158808052641],
    [0.028131280268461123, 0.9437374394630779, 0.0001816158808052641],
    [0.9437374394630779, 0.028131280268461123, 0.0001816158808052641],
    [0.028131280268461123, 0.028131280268461067, 0.0001816158808052641],
    [0.028131280268461067, 0.028131280268461123, 0.0001816158808052641],
    [0.6871213074732971, 0.0224793864387125, 0.0017808351002191545],
    [0.0224793864387125, 0.6871213074732971, 0.0017808351002191545],
    [0.29039930608799036, 0.0224793864387125, 0.0017808351002191545],
    [0.0224793864387125, 0.29039930608799036, 0.0017808351002191545],
    [0.29039930608799036, 0.6871213074732971, 0.0017808351002191545],
    [0.6871213074732971, 0.29039930608799036, 0.0017808351002191545],
    [0.6223120802632947, 0.11467905316090415, 0.003516312969692065],
    [0.11467905316090415, 0.6223120802632947, 0.003516312969692065],
    [0.2630088665758012, 0.11467905316090415, 0.003516312969692065],
    [0.11467905316090415, 0.2630088665758012, 0.003516312969692065],
    [0.2630088665758012, 0.6223120802632947, 0.003516312969692065],
    [0.6223120802632947, 0.2630088665758012, 0.003516312969692065],
    [0.5160929088651122, 0.2657898227845895, 0.0040534727291495235],
    [0.2657898227845895, 0.5160929088651122, 0.0040534727291495235],
    [0.21811726835029832, 0.2657898227845895, 0.0040534727291495235],
    [0.2657898227845895, 0.21811726835029832, 0.0040534727291495235],
    [0.21811726835029832, 0.5160929088651122, 0.0040534727291495235],
    [0.5160929088651122, 0.21811726835029832, 0.0040534727291495235],
    [0.3846066363176857, 0.45284637366944464, 0.003408630770418305],
    [0.45284637366944464, 0.3846066363176857, 0.003408630770418305],
    [0.1625469900128697, 0.45284637366944464, 0.003408630770418305],
    [0.45284637366944464, 0.1625469900128697, 0.003408630770418305],
    [0.1625469900128697, 0.3846066363176857, 0.003408630770418305],
    [0.3846066363176857, 0.1625469900128697, 0.003408630770418305],
    [0.2478678744046879, 0.6473752828868303, 0.002112306000348802],
    [0.6473752828868303, 0.2478678744046879, 0.002112306000348802],
    [0.10475684270848173, 0.6473752828868303, 0.002112306000348802],
    [0.6473752828868303, 0.10475684270848173, 0.002112306000348802],
    [0.10475684270848173, 0.2478678744046879, 0.002112306000348802],
    [0.2478678744046879, 0.10475684270848173, 0.002112306000348802],
    [0.12669525127960912, 0.8197593082631076, 0.0008721111859479386],
    [0.8197593082631076, 0.12669525127960912, 0.0008721111859479386],
    [0.053545440457283267, 0.8197593082631076, 0.0008721111859479386],
    [0.8197593082631076, 0.053545440457283267, 0.0008721111859479386],
    [0.053545440457283267, 0.12669525127960912, 0.0008721111859479386],
    [0.12669525127960912, 0.053545440457283267, 0.0008721111859479386],
    [0.03954822396745463, 0.9437374394630779, 0.00016591668193749402],
    [0.9437374394630779, 0.03954822396745463, 0.00016591668193749402],
    [0.016714336569467525, 0.9437374394630779, 0.00016591668193749402],
    [0.9437374394630779, 0.016714336569467525, 0.00016591668193749402],
    [0.016714336569467525, 0.03954822396745463, 0.00016591668193749402],
    [0.03954822396745463, 0.016714336569467525, 0.00016591668193749402],
    [0.8511913165416183, 0.0224793864387125, 0.001304531108082511],
    [0.0224793864387125, 0.8511913165416183, 0.001304531108082511],
    [0.12632929701966922, 0.0224793864387125, 0.001304531108082511],
    [0.0224793864387125, 0.12632929701966922, 0.001304531108082511],
    [0.12632929701966922, 0.8511913165416183, 0.001304531108082511],
    [0.8511913165416183, 0.12632929701966922, 0.001304531108082511],
    [0.7709070190923346, 0.11467905316090415, 0.002575836277122339],
    [0.11467905316090415, 0.7709070190923346, 0.002575836277122339],
    [0.11441392774676123, 0.11467905316090415, 0.002575836277122339],
    [0.11467905316090415, 0.11441392774676123, 0.002575836277122339],
    [0.11441392774676123, 0.7709070190923346, 0.002575836277122339],
    [0.7709070190923346, 0.11441392774676123, 0.002575836277122339],
    [0.6393249602025477, 0.2657898227845895, 0.0029693267334459698],
    [0.2657898227845895, 0.6393249602025477, 0.0029693267334459698],
    [0.09488521701286279, 0.2657898227845895, 0.0029693267334459698],
    [0.2657898227845895, 0.09488521701286279, 0.0029693267334459698],
    [0.09488521701286279, 0.6393249602025477, 0.0029693267334459698],
    [0.6393249602025477, 0.09488521701286279, 0.0029693267334459698],
    [0.4764425517842301, 0.45284637366944464, 0.002496954869898238],
    [0.45284637366944464, 0.4764425517842301, 0.002496954869898238],
    [0.07071107454632525, 0.45284637366944464, 0.002496954869898238],
    [0.45284637366944464, 0.07071107454632525, 0.002496954869898238],
    [0.07071107454632525, 0.4764425517842301, 0.002496954869898238],
    [0.4764425517842301, 0.07071107454632525, 0.002496954869898238],
    [0.3070534708328747, 0.6473752828868303, 0.0015473464594814264],
    [0.6473752828868303, 0.3070534708328747, 0.0015473464594814264],
    [0.045571246280294964, 0.6473752828868303, 0.0015473464594814264],
    [0.6473752828868303, 0.045571246280294964, 0.0015473464594814264],
    [0.045571246280294964, 0.3070534708328747, 0.0015473464594814264],
    [0.3070534708328747, 0.045571246280294964, 0.0015473464594814264],
    [0.1569473927869026, 0.8197593082631076, 0.0006388554289141141],
    [0.8197593082631076, 0.1569473927869026, 0.0006388554289141141],
    [0.02329329894998977, 0.8197593082631076, 0.0006388554289141141],
    [0.8197593082631076, 0.02329329894998977, 0.0006388554289141141],
    [0.02329329894998977, 0.1569473927869026, 0.0006388554289141141],
    [0.1569473927869026, 0.02329329894998977, 0.0006388554289141141],
    [0.048991501878361855, 0.9437374394630779, 0.000121540435108594],
    [0.9437374394630779, 0.048991501878361855, 0.000121540435108594],
    [0.007271058658560259, 0.9437374394630779, 0.000121540435108594],
    [0.9437374394630779, 0.007271058658560259, 0.000121540435108594],
    [0.007271058658560259, 0.048991501878361855, 0.000121540435108594],
    [0.048991501878361855, 0.007271058658560259, 0.000121540435108594],
    [0.9526465811852267, 0.0224793864387125, 0.0006039110132876303],
    [0.0224793864387125, 0.9526465811852267, 0.0006039110132876303],
    [0.024874032376060784, 0.0224793864387125, 0.0006039110132876303],
    [0.0224793864387125, 0.024874032376060784, 0.0006039110132876303],
    [0.024874032376060784, 0.9526465811852267, 0.0006039110132876303],
    [0.9526465811852267, 0.024874032376060784, 0.0006039110132876303],
    [0.8627930312234322, 0.11467905316090415, 0.0011924406298493568],
    [0.11467905316090415, 0.8627930312234322, 0.0011924406298493568],
    [0.02252791561566364, 0.11467905316090415, 0.0011924406298493568],
    [0.11467905316090415, 0.02252791561566364, 0.0011924406298493568],
    [0.02252791561566364, 0.8627930312234322, 0.0011924406298493568],
    [0.8627930312234322, 0.02252791561566364, 0.0011924406298493568],
    [0.7155274328665677, 0.2657898227845895, 0.0013746005022549337],
    [0.2657898227845895, 0.7155274328665677, 0.0013746005022549337],
    [0.01868274434884276, 0.2657898227845895, 0.0013746005022549337],
    [0.2657898227845895, 0.01868274434884276, 0.0013746005022549337],
    [0.01868274434884276, 0.7155274328665677, 0.0013746005022549337],
    [0.7155274328665677, 0.01868274434884276, 0.0013746005022549337],
    [0.5332307311739592, 0.45284637366944464, 0.0011559237922890158],
    [0.45284637366944464, 0.5332307311739592, 0.0011559237922890158],
    [0.013922895156596116, 0.45284637366944464, 0.0011559237922890158],
    [0.45284637366944464, 0.013922895156596116, 0.0011559237922890158],
    [0.013922895156596116, 0.5332307311739592, 0.0011559237922890158],
    [0.5332307311739592, 0.013922895156596116, 0.0011559237922890158],
    [0.34365181310645293, 0.6473752828868303, 0.000716318347997073],
    [0.6473752828868303, 0.34365181310645293, 0.000716318347997073],
    [0.008972904006716687, 0.6473752828868303, 0.000716318347997073],
    [0.6473752828868303, 0.008972904006716687, 0.000716318347997073],
    [0.008972904006716687, 0.34365181310645293, 0.000716318347997073],
    [0.34365181310645293, 0.008972904006716687, 0.000716318347997073],
    [0.1756542791952545, 0.8197593082631076, 0.00029574751190634225],
    [0.8197593082631076, 0.1756542791952545, 0.00029574751190634225],
    [0.004586412541637941, 0.8197593082631076, 0.00029574751190634225],
    [0.8197593082631076, 0.004586412541637941, 0.00029574751190634225],
    [0.004586412541637941, 0.1756542791952545, 0.00029574751190634225],
    [0.1756542791952545, 0.004586412541637941, 0.00029574751190634225],
    [0.05483090095558918, 0.9437374394630779, 5.626512611856242e-05],
    [0.9437374394630779, 0.05483090095558918, 5.626512611856242e-05],
    [0.0014316595813329558, 0.9437374394630779, 5.626512611856242e-05],
    [0.9437374394630779, 0.0014316595813329558, 5.626512611856242e-05],
    [0.0014316595813329558, 0.05483090095558918, 5.626512611856242e-05],
    [0.05483090095558918, 0.0014316595813329558, 5.626512611856242e-05],
]);

pub(super) const TRI_D15: (u32, &[[f64; 3]]) = (15, &[
    [0.01950205026025014, 0.017779915147363434, 0.00037581772633993337],
    [0.017779915147363434, 0.01950205026025014, 0.00037581772633993337],
    [0.9627180345923865, 0.017779915147363434, 0.00037581772633993337],
    [0.017779915147363434, 0.9627180345923865, 0.00037581772633993337],
    [0.9627180345923865, 0.01950205026025014, 0.00037581772633993337],
    [0.01950205026025014, 0.9627180345923865, 0.00037581772633993337],
    [0.01804183496380008, 0.09132360789979399, 0.0007686537825765215],
    [0.09132360789979399, 0.01804183496380008, 0.0007686537825765215],
    [0.8906345571364059, 0.09132360789979399, 0.0007686537825765215],
    [0.09132360789979399, 0.8906345571364059, 0.0007686537825765215],
    [0.8906345571364059, 0.01804183496380008, 0.0007686537825765215],
    [0.01804183496380008, 0.8906345571364059, 0.0007686537825765215],
    [0.015599961515934214, 0.21430847939563075, 0.000949066450384701],
    [0.21430847939563075, 0.015599961515934214, 0.000949066450384701],
    [0.770091559088435, 0.21430847939563075, 0.000949066450384701],
    [0.21430847939563075, 0.770091559088435, 0.000949066450384701],
    [0.770091559088435, 0.015599961515934214, 0.000949066450384701],
    [0.015599961515934214, 0.770091559088435, 0.000949066450384701],
    [0.01247033193684001, 0.3719321645832723, 0.000894584914429879],
    [0.3719321645832723, 0.01247033193684001, 0.000894584914429879],
    [0.6155975034798877, 0.3719321645832723, 0.000894584914429879],
    [0.3719321645832723, 0.6155975034798877, 0.000894584914429879],
    [0.6155975034798877, 0.01247033193684001, 0.000894584914429879],
    [0.01247033193684001, 0.6155975034798877, 0.000894584914429879],
    [0.009030351006643593, 0.5451866848034267, 0.0006681049609492874],
    [0.5451866848034267, 0.009030351006643593, 0.0006681049609492874],
    [0.4457829641899297, 0.5451866848034267, 0.0006681049609492874],
    [0.5451866848034267, 0.4457829641899297, 0.0006681049609492874],
    [0.4457829641899297, 0.009030351006643593, 0.0006681049609492874],
    [0.009030351006643593, 0.4457829641899297, 0.0006681049609492874],
    [0.005694926133132321, 0.7131752428555694, 0.0003833129836242823],
    [0.7131752428555694, 0.005694926133132321, 0.0003833129836242823],
    [0.2811298310112983, 0.7131752428555694, 0.0003833129836242823],
    [0.7131752428555694, 0.2811298310112983, 0.0003833129836242823],
    [0.2811298310112983, 0.005694926133132321, 0.0003833129836242823],
    [0.005694926133132321, 0.2811298310112983, 0.0003833129836242823],
    [0.0028664023920285816, 0.8556337429578544, 0.00015051757658642842],
    [0.8556337429578544, 0.0028664023920285816, 0.00015051757658642842],
    [0.14149985465011694, 0.8556337429578544, 0.00015051757658642842],
    [0.8556337429578544, 0.14149985465011694, 0.00015051757658642842],
    [0.14149985465011694, 0.0028664023920285816, 0.00015051757658642842],
    [0.0028664023920285816, 0.14149985465011694, 0.00015051757658642842],
    [0.0008862103848236257, 0.9553660447100302, 2.779728387461787e-05],
    [0.9553660447100302, 0.0008862103848236257, 2.779728387461787e-05],
    [0.04374774490514621, 0.9553660447100302, 2.779728387461787e-05],
    [0.9553660447100302, 0.04374774490514621, 2.779728387461787e-05],
    [0.04374774490514621, 0.0008862103848236257, 2.779728387461787e-05],
    [0.0008862103848236257, 0.04374774490514621, 2.779728387461787e-05],
    [0.09985913490408653, 0.017779915147363434, 0.0008256044966377293],
    [0.017779915147363434, 0.09985913490408653, 0.0008256044966377293],
    [0.8823609499485501, 0.017779915147363434, 0.0008256044966377293],
    [0.017779915147363434, 0.8823609499485501, 0.0008256044966377293],
    [0.8823609499485501, 0.09985913490408653, 0.0008256044966377293],
    [0.09985913490408653, 0.8823609499485501, 0.0008256044966377293],
    [0.09238218584840571, 0.09132360789979399, 0.0016885952278865252],
    [0.09132360789979399, 0.09238218584840571, 0.0016885952278865252],
    [0.8162942062518003, 0.09132360789979399, 0.0016885952278865252],
    [0.09132360789979399, 0.8162942062518003, 0.0016885952278865252],
    [0.8162942062518003, 0.09238218584840571, 0.0016885952278865252],
    [0.09238218584840571, 0.8162942062518003, 0.0016885952278865252],
    [0.07987871227536525, 0.21430847939563075, 0.0020849296723616504],
    [0.21430847939563075, 0.07987871227536525, 0.0020849296723616504],
    [0.7058128083290041, 0.21430847939563075, 0.0020849296723616504],
    [0.21430847939563075, 0.7058128083290041, 0.0020849296723616504],
    [0.7058128083290041, 0.07987871227536525, 0.0020849296723616504],
    [0.07987871227536525, 0.7058128083290041, 0.0020849296723616504],
    [0.06385362269924089, 0.3719321645832723, 0.001965243457700914],
    [0.3719321645832723, 0.06385362269924089, 0.001965243457700914],
    [0.5642142127174868, 0.3719321645832723, 0.001965243457700914],
    [0.3719321645832723, 0.5642142127174868, 0.001965243457700914],
    [0.5642142127174868, 0.06385362269924089, 0.001965243457700914],
    [0.06385362269924089, 0.5642142127174868, 0.001965243457700914],
    [0.04623939674905287, 0.5451866848034267, 0.0014677074052829098],
    [0.5451866848034267, 0.04623939674905287, 0.0014677074052829098],
    [0.40857391844752045, 0.5451866848034267, 0.0014677074052829098],
    [0.5451866848034267, 0.40857391844752045, 0.0014677074052829098],
    [0.40857391844752045, 0.04623939674905287, 0.0014677074052829098],
    [0.04623939674905287, 0.40857391844752045, 0.0014677074052829098],
    [0.02916054411757905, 0.7131752428555694, 0.0008420702396926961],
    [0.7131752428555694, 0.02916054411757905, 0.0008420702396926961],
    [0.2576642130268515, 0.7131752428555694, 0.0008420702396926961],
    [0.7131752428555694, 0.2576642130268515, 0.0008420702396926961],
    [0.2576642130268515, 0.02916054411757905, 0.0008420702396926961],
    [0.02916054411757905, 0.2576642130268515, 0.0008420702396926961],
    [0.014677249793494638, 0.8556337429578544, 0.00033066026252409034],
    [0.8556337429578544, 0.014677249793494638, 0.00033066026252409034],
    [0.12968900724865096, 0.8556337429578544, 0.00033066026252409034],
    [0.8556337429578544, 0.12968900724865096, 0.00033066026252409034],
    [0.12968900724865096, 0.014677249793494638, 0.00033066026252409034],
    [0.014677249793494638, 0.12968900724865096, 0.00033066026252409034],
    [0.004537789678036128, 0.9553660447100302, 6.10656734707657e-05],
    [0.9553660447100302, 0.004537789678036128, 6.10656734707657e-05],
    [0.04009616561193374, 0.9553660447100302, 6.10656734707657e-05],
    [0.9553660447100302, 0.04009616561193374, 6.10656734707657e-05],
    [0.04009616561193374, 0.004537789678036128, 6.10656734707657e-05],
    [0.004537789678036128, 0.04009616561193374, 6.10656734707657e-05],
    [0.23301579829590466, 0.017779915147363434, 0.0011646569506188092],
    [0.017779915147363434, 0.23301579829590466, 0.0011646569506188092],
    [0.7492042865567319, 0.017779915147363434, 0.0011646569506188092],
    [0.017779915147363434, 0.7492042865567319, 0.0011646569506188092],
    [0.7492042865567319, 0.23301579829590466, 0.0011646569506188092],
    [0.23301579829590466, 0.7492042865567319, 0.0011646569506188092],
    [0.21556874896285483, 0.09132360789979399, 0.002382053606719565],
    [0.09132360789979399, 0.21556874896285483, 0.002382053606719565],
    [0.6931076431373512, 0.09132360789979399, 0.002382053606719565],
    [0.09132360789979399, 0.6931076431373512, 0.002382053606719565],
    [0.6931076431373512, 0.21556874896285483, 0.002382053606719565],
    [0.21556874896285483, 0.6931076431373512, 0.002382053606719565],
    [0.18639258116516502, 0.21430847939563075, 0.00294115141615185],
    [0.21430847939563075, 0.18639258116516502, 0.00294115141615185],
    [0.5992989394392043, 0.21430847939563075, 0.00294115141615185],
    [0.21430847939563075, 0.5992989394392043, 0.00294115141615185],
    [0.5992989394392043, 0.18639258116516502, 0.00294115141615185],
    [0.18639258116516502, 0.5992989394392043, 0.00294115141615185],
    [0.14899891613962127, 0.3719321645832723, 0.0027723134527376965],
    [0.3719321645832723, 0.14899891613962127, 0.0027723134527376965],
    [0.4790689192771065, 0.3719321645832723, 0.0027723134527376965],
    [0.3719321645832723, 0.4790689192771065, 0.0027723134527376965],
    [0.4790689192771065, 0.14899891613962127, 0.0027723134527376965],
    [0.14899891613962127, 0.4790689192771065, 0.0027723134527376965],
    [0.1078970887996416, 0.5451866848034267, 0.002070453392633959],
    [0.5451866848034267, 0.1078970887996416, 0.002070453392633959],
    [0.34691622639693176, 0.5451866848034267, 0.002070453392633959],
    [0.5451866848034267, 0.34691622639693176, 0.002070453392633959],
    [0.34691622639693176, 0.1078970887996416, 0.002070453392633959],
    [0.1078970887996416, 0.34691622639693176, 0.002070453392633959],
    [0.06804452564932609, 0.7131752428555694, 0.001187884709399398],
    [0.7131752428555694, 0.06804452564932609, 0.001187884709399398],
    [0.2187802314951045, 0.7131752428555694, 0.001187884709399398],
    [0.7131752428555694, 0.2187802314951045, 0.001187884709399398],
    [0.2187802314951045, 0.06804452564932609, 0.001187884709399398],
    [0.06804452564932609, 0.2187802314951045, 0.001187884709399398],
    [0.034248555034093305, 0.8556337429578544, 0.0004664530954112576],
    [0.8556337429578544, 0.034248555034093305, 0.0004664530954112576],
    [0.11011770200805227, 0.8556337429578544, 0.0004664530954112576],
    [0.8556337429578544, 0.11011770200805227, 0.0004664530954112576],
    [0.11011770200805227, 0.034248555034093305, 0.0004664530954112576],
    [0.034248555034093305, 0.11011770200805227, 0.0004664530954112576],
    [0.010588682601167153, 0.9553660447100302, 8.614362123944829e-05],
    [0.9553660447100302, 0.010588682601167153, 8.614362123944829e-05],
    [0.03404527268880264, 0.9553660447100302, 8.614362123944829e-05],
    [0.9553660447100302, 0.03404527268880264, 8.614362123944829e-05],
    [0.03404527268880264, 0.010588682601167153, 8.614362123944829e-05],
    [0.010588682601167153, 0.03404527268880264, 8.614362123944829e-05],
    [0.40102344736782314, 0.017779915147363434, 0.0013464878565331983],
    [0.017779915147363434, 0.40102344736782314, 0.0013464878565331983],
    [0.5811966374848134, 0.017779915147363434, 0.0013464878565331983],
    [0.017779915147363434, 0.5811966374848134, 0.0013464878565331983],
    [0.5811966374848134, 0.40102344736782314, 0.0013464878565331983],
    [0.40102344736782314, 0.5811966374848134, 0.0013464878565331983],
    [0.37099683148553386, 0.09132360789979399, 0.002753949352515203],
    [0.09132360789979399, 0.37099683148553386, 0.002753949352515203],
    [0.5376795606146721, 0.09132360789979399, 0.002753949352515203],
    [0.09132360789979399, 0.5376795606146721, 0.002753949352515203],
    [0.5376795606146721, 0.37099683148553386, 0.002753949352515203],
    [0.37099683148553386, 0.5376795606146721, 0.002753949352515203],
    [0.32078423870522166, 0.21430847939563075, 0.0034003357503423867],
    [0.21430847939563075, 0.32078423870522166, 0.0034003357503423867],
    [0.4649072818991476, 0.21430847939563075, 0.0034003357503423867],
    [0.21430847939563075, 0.4649072818991476, 0.0034003357503423867],
    [0.4649072818991476, 0.32078423870522166, 0.0034003357503423867],
    [0.32078423870522166, 0.4649072818991476, 0.0034003357503423867],
    [0.2564292182820218, 0.3719321645832723, 0.003205138128125678],
    [0.3719321645832723, 0.2564292182820218, 0.003205138128125678],
    [0.3716386171347059, 0.3719321645832723, 0.003205138128125678],
    [0.3719321645832723, 0.3716386171347059, 0.003205138128125678],
    [0.3716386171347059, 0.2564292182820218, 0.003205138128125678],
    [0.2564292182820218, 0.3716386171347059, 0.003205138128125678],
    [0.18569239866061427, 0.5451866848034267, 0.0023937008654937777],
    [0.5451866848034267, 0.18569239866061427, 0.0023937008654937777],
    [0.26912091653595904, 0.5451866848034267, 0.0023937008654937777],
    [0.5451866848034267, 0.26912091653595904, 0.0023937008654937777],
    [0.26912091653595904, 0.18569239866061427, 0.0023937008654937777],
    [0.18569239866061427, 0.26912091653595904, 0.0023937008654937777],
    [0.11710558017937017, 0.7131752428555694, 0.0013733420260085337],
    [0.7131752428555694, 0.11710558017937017, 0.0013733420260085337],
    [0.16971917696506045, 0.7131752428555694, 0.0013733420260085337],
    [0.7131752428555694, 0.16971917696506045, 0.0013733420260085337],
    [0.16971917696506045, 0.11710558017937017, 0.0013733420260085337],
    [0.11710558017937017, 0.16971917696506045, 0.0013733420260085337],
    [0.058942242146592244, 0.8556337429578544, 0.0005392776201437424],
    [0.8556337429578544, 0.058942242146592244, 0.0005392776201437424],
    [0.08542401489555329, 0.8556337429578544, 0.0005392776201437424],
    [0.8556337429578544, 0.08542401489555329, 0.0005392776201437424],
    [0.08542401489555329, 0.058942242146592244, 0.0005392776201437424],
    [0.058942242146592244, 0.08542401489555329, 0.0005392776201437424],
    [0.018223270829093696, 0.9553660447100302, 9.959270826923198e-05],
    [0.9553660447100302, 0.018223270829093696, 9.959270826923198e-05],
    [0.026410684460876133, 0.9553660447100302, 9.959270826923198e-05],
    [0.9553660447100302, 0.026410684460876133, 9.959270826923198e-05],
    [0.026410684460876133, 0.018223270829093696, 9.959270826923198e-05],
    [0.018223270829093696, 0.026410684460876133, 9.959270826923198e-05],
    [0.5811966374848134, 0.017779915147363434, 0.0013464878565331983],
    [0.017779915147363434, 0.5811966374848134, 0.0013464878565331983],
    [0.40102344736782314, 0.017779915147363434, 0.0013464878565331983],
    [0.017779915147363434, 0.40102344736782314, 0.0013464878565331983],
    [0.40102344736782314, 0.5811966374848134, 0.0013464878565331983],
    [0.5811966374848134, 0.40102344736782314, 0.0013464878565331983],
    [0.5376795606146721, 0.09132360789979399, 0.002753949352515203],
    [0.09132360789979399, 0.5376795606146721, 0.002753949352515203],
    [0.37099683148553386, 0.09132360789979399, 0.002753949352515203],
    [0.09132360789979399, 0.37099683148553386, 0.002753949352515203],
    [0.37099683148553386, 0.5376795606146721, 0.002753949352515203],
    [0.5376795606146721, 0.37099683148553386, 0.002753949352515203],
    [0.46490728189914765, 0.21430847939563075, 0.0034003357503423867],
    [0.21430847939563075, 0.46490728189914765, 0.0034003357503423867],
    [0.3207842387052216, 0.21430847939563075, 0.0034003357503423867],
    [0.21430847939563075, 0.3207842387052216, 0.0034003357503423867],
    [0.3207842387052216, 0.46490728189914765, 0.0034003357503423867],
    [0.46490728189914765, 0.3207842387052216, 0.0034003357503423867],
    [0.3716386171347059, 0.3719321645832723, 0.003205138128125678],
    [0.3719321645832723, 0.3716386171347059, 0.003205138128125678],
    [0.2564292182820218, 0.3719321645832723, 0.003205138128125678],
    [0.3719321645832723, 0.2564292182820218, 0.003205138128125678],
    [0.2564292182820218, 0.3716386171347059, 0.003205138128125678],
    [0.3716386171347059, 0.2564292182820218, 0.003205138128125678],
    [0.26912091653595904, 0.5451866848034267, 0.0023937008654937777],
    [0.5451866848034267, 0.26912091653595904, 0.0023937008654937777],
    [0.18569239866061427, 0.5451866848034267, 0.0023937008654937777],
    [0.5451866848034267, 0.18569239866061427, 0.0023937008654937777],
    [0.18569239866061427, 0.26912091653595904, 0.0023937008654937777],
    [0.26912091653595904, 0.18569239866061427, 0.0023937008654937777],
    [0.1697191769650604, 0.7131752428555694, 0.0013733420260085337],
    [0.7131752428555694, 0.1697191769650604, 0.0013733420260085337],
    [0.11710558017937023, 0.7131752428555694, 0.0013733420260085337],
    [0.7131752428555694, 0.11710558017937023, 0.0013733420260085337],
    [0.11710558017937023, 0.1697191769650604, 0.0013733420260085337],
    [0.1697191769650604, 0.11710558017937023, 0.0013733420260085337],
    [0.08542401489555332, 0.8556337429578544, 0.0005392776201437424],
    [0.8556337429578544, 0.08542401489555332, 0.0005392776201437424],
    [0.05894224214659227, 0.8556337429578544, 0.0005392776201437424],
    [0.8556337429578544, 0.05894224214659227, 0.0005392776201437424],
    [0.05894224214659227, 0.08542401489555332, 0.0005392776201437424],
    [0.08542401489555332, 0.05894224214659227, 0.0005392776201437424],
    [0.026410684460876133, 0.9553660447100302, 9.959270826923198e-05],
    [0.9553660447100302, 0.026410684460876133, 9.959270826923198e-05],
    [0.018223270829093696, 0.9553660447100302, 9.959270826923198e-05],
    [0.9553660447100302, 0.018223270829093696, 9.959270826923198e-05],
    [0.018223270829093696, 0.026410684460876133, 9.959270826923198e-05],
    [0.026410684460876133, 0.018223270829093696, 9.959270826923198e-05],
    [0.7492042865567319, 0.017779915147363434, 0.0011646569506188092],
    [0.017779915147363434, 0.7492042865567319, 0.0011646569506188092],
    [0.23301579829590469, 0.017779915147363434, 0.0011646569506188092],
    [0.017779915147363434, 0.23301579829590469, 0.0011646569506188092],
    [0.23301579829590469, 0.7492042865567319, 0.0011646569506188092],
    [0.7492042865567319, 0.23301579829590469, 0.0011646569506188092],
    [0.6931076431373512, 0.09132360789979399, 0.002382053606719565],
    [0.09132360789979399, 0.6931076431373512, 0.002382053606719565],
    [0.21556874896285483, 0.09132360789979399, 0.002382053606719565],
    [0.09132360789979399, 0.21556874896285483, 0.002382053606719565],
    [0.21556874896285483, 0.6931076431373512, 0.002382053606719565],
    [0.6931076431373512, 0.21556874896285483, 0.002382053606719565],
    [0.5992989394392043, 0.21430847939563075, 0.00294115141615185],
    [0.21430847939563075, 0.5992989394392043, 0.00294115141615185],
    [0.18639258116516494, 0.21430847939563075, 0.00294115141615185],
    [0.21430847939563075, 0.18639258116516494, 0.00294115141615185],
    [0.18639258116516494, 0.5992989394392043, 0.00294115141615185],
    [0.5992989394392043, 0.18639258116516494, 0.00294115141615185],
    [0.4790689192771065, 0.3719321645832723, 0.0027723134527376965],
    [0.3719321645832723, 0.4790689192771065, 0.0027723134527376965],
    [0.14899891613962124, 0.3719321645832723, 0.0027723134527376965],
    [0.3719321645832723, 0.14899891613962124, 0.0027723134527376965],
    [0.14899891613962124, 0.4790689192771065, 0.0027723134527376965],
    [0.4790689192771065, 0.14899891613962124, 0.0027723134527376965],
    [0.3469162263969317, 0.5451866848034267, 0.002070453392633959],
    [0.5451866848034267, 0.3469162263969317, 0.002070453392633959],
    [0.10789708879964166, 0.5451866848034267, 0.002070453392633959],
    [0.5451866848034267, 0.10789708879964166, 0.002070453392633959],
    [0.10789708879964166, 0.3469162263969317, 0.002070453392633959],
    [0.3469162263969317, 0.10789708879964166, 0.002070453392633959],
    [0.21878023149510448, 0.7131752428555694, 0.001187884709399398],
    [0.7131752428555694, 0.21878023149510448, 0.001187884709399398],
    [0.06804452564932606, 0.7131752428555694, 0.001187884709399398],
    [0.7131752428555694, 0.06804452564932606, 0.001187884709399398],
    [0.06804452564932606, 0.21878023149510448, 0.001187884709399398],
    [0.21878023149510448, 0.06804452564932606, 0.001187884709399398],
    [0.11011770200805227, 0.8556337429578544, 0.0004664530954112576],
    [0.8556337429578544, 0.11011770200805227, 0.0004664530954112576],
    [0.0342485550340933, 0.8556337429578544, 0.0004664530954112576],
    [0.8556337429578544, 0.0342485550340933, 0.0004664530954112576],
    [0.0342485550340933, 0.11011770200805227, 0.0004664530954112576],
    [0.11011770200805227, 0.0342485550340933, 0.0004664530954112576],
    [0.034045272688802676, 0.9553660447100302, 8.614362123944829e-05],
    [0.9553660447100302, 0.034045272688802676, 8.614362123944829e-05],
    [0.010588682601167188, 0.9553660447100302, 8.614362123944829e-05],
    [0.9553660447100302, 0.010588682601167188, 8.614362123944829e-05],
    [0.010588682601167188, 0.034045272688802676, 8.614362123944829e-05],
    [0.034045272688802676, 0.010588682601167188, 8.614362123944829e-05],
    [0.8823609499485501, 0.017779915147363434, 0.0008256044966377293],
    [0.017779915147363434, 0.8823609499485501, 0.0008256044966377293],
    [0.09985913490408649, 0.017779915147363434, 0.0008256044966377293],
    [0.017779915147363434, 0.09985913490408649, 0.0008256044966377293],
    [0.09985913490408649, 0.8823609499485501, 0.0008256044966377293],
    [0.8823609499485501, 0.09985913490408649, 0.0008256044966377293],
    [0.8162942062518003, 0.09132360789979399, 0.0016885952278865252],
    [0.09132360789979399, 0.8162942062518003, 0.0016885952278865252],
    [0.09238218584840574, 0.09132360789979399, 0.0016885952278865252],
    [0.09132360789979399, 0.09238218584840574, 0.0016885952278865252],
    [0.09238218584840574, 0.8162942062518003, 0.0016885952278865252],
    [0.8162942062518003, 0.09238218584840574, 0.0016885952278865252],
    [0.7058128083290041, 0.21430847939563075, 0.0020849296723616504],
    [0.21430847939563075, 0.7058128083290041, 0.0020849296723616504],
    [0.0798787122753652, 0.21430847939563075, 0.0020849296723616504],
    [0.21430847939563075, 0.0798787122753652, 0.0020849296723616504],
    [0.0798787122753652, 0.7058128083290041, 0.0020849296723616504],
    [0.7058128083290041, 0.0798787122753652, 0.0020849296723616504],
    [0.5642142127174868, 0.3719321645832723, 0.001965243457700914],
    [0.3719321645832723, 0.5642142127174868, 0.001965243457700914],
    [0.06385362269924089, 0.3719321645832723, 0.001965243457700914],
    [0.3719321645832723, 0.06385362269924089, 0.001965243457700914],
    [0.06385362269924089, 0.5642142127174868, 0.001965243457700914],
    [0.5642142127174868, 0.06385362269924089, 0.001965243457700914],
    [0.40857391844752045, 0.5451866848034267, 0.0014677074052829098],
    [0.5451866848034267, 0.40857391844752045, 0.0014677074052829098],
    [0.04623939674905286, 0.5451866848034267, 0.0014677074052829098],
    [0.5451866848034267, 0.04623939674905286, 0.0014677074052829098],
    [0.04623939674905286, 0.40857391844752045, 0.0014677074052829098],
    [0.40857391844752045, 0.04623939674905286, 0.0014677074052829098],
    [0.2576642130268515, 0.7131752428555694, 0.0008420702396926961],
    [0.7131752428555694, 0.2576642130268515, 0.0008420702396926961],
    [0.029160544117579068, 0.7131752428555694, 0.0008420702396926961],
    [0.7131752428555694, 0.029160544117579068, 0.0008420702396926961],
    [0.029160544117579068, 0.2576642130268515, 0.0008420702396926961],
    [0.2576642130268515, 0.029160544117579068, 0.0008420702396926961],
    [0.12968900724865093, 0.8556337429578544, 0.00033066026252409034],
    [0.8556337429578544, 0.12968900724865093, 0.00033066026252409034],
    [0.014677249793494607, 0.8556337429578544, 0.00033066026252409034],
    [0.8556337429578544, 0.014677249793494607, 0.00033066026252409034],
    [0.014677249793494607, 0.12968900724865093, 0.00033066026252409034],
    [0.12968900724865093, 0.014677249793494607, 0.00033066026252409034],
    [0.0400961656119337, 0.9553660447100302, 6.10656734707657e-05],
    [0.9553660447100302, 0.0400961656119337, 6.10656734707657e-05],
    [0.004537789678036086, 0.9553660447100302, 6.10656734707657e-05],
    [0.9553660447100302, 0.004537789678036086, 6.10656734707657e-05],
    [0.004537789678036086, 0.0400961656119337, 6.10656734707657e-05],
    [0.0400961656119337, 0.004537789678036086, 6.10656734707657e-05],
    [0.9627180345923865, 0.017779915147363434, 0.00037581772633993337],
    [0.017779915147363434, 0.9627180345923865, 0.00037581772633993337],
    [0.019502050260250092, 0.017779915147363434, 0.00037581772633993337],
    [0.017779915147363434, 0.019502050260250092, 0.00037581772633993337],
    [0.019502050260250092, 0.9627180345923865, 0.00037581772633993337],
    [0.9627180345923865, 0.019502050260250092, 0.00037581772633993337],
    [0.8906345571364059, 0.09132360789979399, 0.0007686537825765215],
    [0.09132360789979399, 0.8906345571364059, 0.0007686537825765215],
    [0.018041834963800074, 0.09132360789979399, 0.0007686537825765215],
    [0.09132360789979399, 0.018041834963800074, 0.0007686537825765215],
    [0.018041834963800074, 0.8906345571364059, 0.0007686537825765215],
    [0.8906345571364059, 0.018041834963800074, 0.0007686537825765215],
    [0.7700915590884352, 0.21430847939563075, 0.000949066450384701],
    [0.21430847939563075, 0.7700915590884352, 0.000949066450384701],
    [0.015599961515934069, 0.21430847939563075, 0.000949066450384701],
    [0.21430847939563075, 0.015599961515934069, 0.000949066450384701],
    [0.015599961515934069, 0.7700915590884352, 0.000949066450384701],
    [0.7700915590884352, 0.015599961515934069, 0.000949066450384701],
    [0.6155975034798877, 0.3719321645832723, 0.000894584914429879],
    [0.3719321645832723, 0.6155975034798877, 0.000894584914429879],
    [0.012470331936839996, 0.3719321645832723, 0.000894584914429879],
    [0.3719321645832723, 0.012470331936839996, 0.000894584914429879],
    [0.012470331936839996, 0.6155975034798877, 0.000894584914429879],
    [0.6155975034798877, 0.012470331936839996, 0.000894584914429879],
    [0.44578296418992974, 0.5451866848034267, 0.0006681049609492874],
    [0.5451866848034267, 0.44578296418992974, 0.0006681049609492874],
    [0.009030351006643511, 0.5451866848034267, 0.0006681049609492874],
    [0.5451866848034267, 0.009030351006643511, 0.0006681049609492874],
    [0.009030351006643511, 0.44578296418992974, 0.0006681049609492874],
    [0.44578296418992974, 0.009030351006643511, 0.0006681049609492874],
    [0.28112983101129824, 0.7131752428555694, 0.0003833129836242823],
    [0.7131752428555694, 0.28112983101129824, 0.0003833129836242823],
    [0.005694926133132383, 0.7131752428555694, 0.0003833129836242823],
    [0.7131752428555694, 0.005694926133132383, 0.0003833129836242823],
    [0.005694926133132383, 0.28112983101129824, 0.0003833129836242823],
    [0.28112983101129824, 0.005694926133132383, 0.0003833129836242823],
    [0.141499854650117, 0.8556337429578544, 0.00015051757658642842],
    [0.8556337429578544, 0.141499854650117, 0.00015051757658642842],
    [0.002866402392028622, 0.8556337429578544, 0.00015051757658642842],
    [0.8556337429578544, 0.002866402392028622, 0.00015051757658642842],
    [0.002866402392028622, 0.141499854650117, 0.00015051757658642842],
    [0.141499854650117, 0.002866402392028622, 0.00015051757658642842],
    [0.043747744905146206, 0.9553660447100302, 2.779728387461787e-05],
    [0.9553660447100302, 0.043747744905146206, 2.779728387461787e-05],
    [0.0008862103848236158, 0.9553660447100302, 2.779728387461787e-05],
    [0.9553660447100302, 0.0008862103848236158, 2.779728387461787e-05],
    [0.0008862103848236158, 0.043747744905146206, 2.779728387461787e-05],
    [0.043747744905146206, 0.0008862103848236158, 2.779728387461787e-05],
]);

pub(super) const TET_D1: (u32, &[[f64; 4]]) = (1, &[
    [0.25, 0.25, 0.25, 0.16666666666666666],
]);

pub(super) const TET_D2: (u32, &[[f64; 4]]) = (2, &[
    [0.1381966011250105, 0.1381966011250105, 0.1381966011250105, 0.041666666666666664],
    [0.5854101966249685, 0.1381966011250105, 0.1381966011250105, 0.041666666666666664],
    [0.1381966011250105, 0.5854101966249685, 0.1381966011250105, 0.041666666666666664],
    [0.1381966011250105, 0.1381966011250105, 0.5854101966249685, 0.041666666666666664],
]);

pub(super) const TET_D9: (u32, &[[f64; 4]]) = (9, &[
    [0.04348506843299291, 0.038433274396333254, 0.03457893991821509, 0.0009374398217669938],
    [0.037228589988925066, 0.032903630280304574, 0.17348032077169567, 0.0014468812384700466],
    [0.02748109949881237, 0.02428853571607679, 0.3898863870655193, 0.001022687015780537],
    [0.016470568774368477, 0.014557132183071371, 0.6343334726308868, 0.00036752003800732535],
    [0.006708904550162075, 0.005929510490997776, 0.8510542129470164, 4.7165336505936485e-05],
    [0.036320349320621594, 0.19116632379395632, 0.03457893991821509, 0.0016192765852693287],
    [0.031094705420448406, 0.16366198662379483, 0.17348032077169567, 0.002499254732643922],
    [0.022953238191395598, 0.12081068178837216, 0.3898863870655193, 0.0017665274082243967],
    [0.013756832700313916, 0.0724068788863314, 0.6343334726308868, 0.0006348317815652548],
    [0.005603527040461492, 0.029493264372235897, 0.8510542129470164, 8.147053631288427e-05],
    [0.02545298347097099, 0.42283010559815015, 0.03457893991821509, 0.0014179245325509268],
    [0.02179089788247224, 0.36199479967574705, 0.17348032077169567, 0.0021884801094189874],
    [0.01608542878080595, 0.2672143938543264, 0.3898863870655193, 0.001546865169503061],
    [0.009640668162164332, 0.16015272793830798, 0.6343334726308868, 0.0005558924060985346],
    [0.003926902791626685, 0.06523450282167806, 0.8510542129470164, 7.133992621705566e-05],
    [0.013791806769482948, 0.6714158560300757, 0.03457893991821509, 0.00071589150194387],
    [0.01180749020134917, 0.5748149081269931, 0.17348032077169567, 0.0011049349077045982],
    [0.008715957632321218, 0.42431222048264017, 0.3898863870655193, 0.0007809919386245135],
    [0.0052238368273377295, 0.2543080057465078, 0.6343334726308868, 0.00028066278591366313],
    [0.0021278088899254807, 0.10358647356188863, 0.8510542129470164, 3.6018593201298276e-05],
    [0.004462454629928926, 0.8702932130946324, 0.03457893991821509, 0.0001525364704986193],
    [0.003820412379430868, 0.7450784917211248, 0.17348032077169567, 0.00023543074683011366],
    [0.0028201211154348566, 0.5499960157369496, 0.3898863870655193, 0.00016640755405279004],
    [0.0016902161715118362, 0.32963554472103873, 0.6343334726308868, 5.9801395389292425e-05],
    [0.0006884703934122668, 0.1342694011463441, 0.8510542129470164, 7.674555521798018e-06],
    [0.2139166561255058, 0.038433274396333254, 0.03457893991821509, 0.001893772314860301],
    [0.18313908129108614, 0.032903630280304574, 0.17348032077169567, 0.002922922163836153],
    [0.1351881260230007, 0.02428853571607679, 0.3898863870655193, 0.0020659847302002795],
    [0.0810238806942951, 0.014557132183071371, 0.6343334726308868, 0.000742446882427908],
    [0.033003200393884866, 0.005929510490997776, 0.8510542129470164, 9.528121850813961e-05],
    [0.17867116129643199, 0.19116632379395632, 0.03457893991821509, 0.0032711872229882577],
    [0.15296458408475716, 0.16366198662379483, 0.17348032077169567, 0.0050488781365648685],
    [0.11291415968958744, 0.12081068178837216, 0.3898863870655193, 0.0035686564848839996],
    [0.06767416394121156, 0.0724068788863314, 0.6343334726308868, 0.0012824576304595497],
    [0.027565502601231008, 0.029493264372235897, 0.8510542129470164, 0.00016458298715681176],
    [0.1252111887766239, 0.42283010559815015, 0.03457893991821509, 0.002864425173708491],
    [0.10719624406648309, 0.36199479967574705, 0.17348032077169567, 0.004421065701079483],
    [0.07912925657314307, 0.2672143938543264, 0.3898863870655193, 0.0031249050496968385],
    [0.047425462817050915, 0.16015272793830798, 0.6343334726308868, 0.0011229879766854486],
    [0.019317663381606832, 0.06523450282167806, 0.8510542129470164, 0.00014411759995364997],
    [0.06784621232925238, 0.6714158560300757, 0.03457893991821509, 0.0014462107063785861],
    [0.05808473832803965, 0.5748149081269931, 0.17348032077169567, 0.0022321380949974104],
    [0.04287652242081134, 0.42431222048264017, 0.3898863870655193, 0.0015777235798542788],
    [0.02569768765504614, 0.2543080057465078, 0.6343334726308868, 0.0005669819026601678],
    [0.010467357624338812, 0.10358647356188863, 0.8510542129470164, 7.276308627071355e-05],
    [0.021952210424070764, 0.8702932130946324, 0.03457893991821509, 0.0003081470811558829],
    [0.018793803728000488, 0.7450784917211248, 0.17348032077169567, 0.0004756062416607825],
    [0.013873058054682596, 0.5499960157369496, 0.3898863870655193, 0.0003361687988193041],
    [0.008314702139567986, 0.32963554472103873, 0.6343334726308868, 0.00012080799678937197],
    [0.003386801256323266, 0.1342694011463441, 0.8510542129470164, 1.5503780017200733e-05],
    [0.4634938928427258, 0.038433274396333254, 0.03457893991821509, 0.0022509015744614524],
    [0.3968080244739999, 0.032903630280304574, 0.17348032077169567, 0.0034741294130136253],
    [0.29291253860920197, 0.02428853571607679, 0.3898863870655193, 0.0024555899595375442],
    [0.1755546975930209, 0.014557132183071371, 0.6343334726308868, 0.0008824581727683845],
    [0.0715081382809929, 0.005929510490997776, 0.8510542129470164, 0.00011324943504224687],
    [0.38712736814391435, 0.19116632379395632, 0.03457893991821509, 0.0038880706053228023],
    [0.3314288463022548, 0.16366198662379483, 0.17348032077169567, 0.006001000045085251],
    [0.24465146557305426, 0.12081068178837216, 0.3898863870655193, 0.004241636883961956],
    [0.14662982424139087, 0.0724068788863314, 0.6343334726308868, 0.0015243046257091615],
    [0.05972626134037384, 0.029493264372235897, 0.8510542129470164, 0.00019562019257218075],
    [0.27129547724181735, 0.42283010559815015, 0.03457893991821509, 0.003404601008703141],
    [0.2322624397762786, 0.36199479967574705, 0.17348032077169567, 0.005254794184744127],
    [0.17144960954007718, 0.2672143938543264, 0.3898863870655193, 0.0037142024102955733],
    [0.10275689971540264, 0.16015272793830798, 0.6343334726308868, 0.0013347620434555896],
    [0.041855642115652736, 0.06523450282167806, 0.8510542129470164, 0.00017129542453323186],
    [0.1470026020258546, 0.6714158560300757, 0.03457893991821509, 0.0017189384016476675],
    [0.12585238555065562, 0.5748149081269931, 0.17348032077169567, 0.0026530766729556347],
    [0.09290069622592026, 0.42431222048264017, 0.3898863870655193, 0.001875252089225376],
    [0.0556792608113027, 0.2543080057465078, 0.6343334726308868, 0.0006739038517854061],
    [0.02267965674554745, 0.10358647356188863, 0.8510542129470164, 8.64848134932765e-05],
    [0.04756392349357627, 0.8702932130946324, 0.03457893991821509, 0.0003662577305079273],
    [0.040720593753589746, 0.7450784917211248, 0.17348032077169567, 0.0005652964877443151],
    [0.030058798598765563, 0.5499960157369496, 0.3898863870655193, 0.00039956380849458424],
    [0.018015491324037236, 0.32963554472103873, 0.6343334726308868, 0.00014359007576937298],
    [0.007338192953319722, 0.1342694011463441, 0.8510542129470164, 1.842749657758907e-05],
    [0.7130711295599457, 0.038433274396333254, 0.03457893991821509, 0.001893772314860301],
    [0.6104769676569136, 0.032903630280304574, 0.17348032077169567, 0.002922922163836153],
    [0.4506369511954032, 0.02428853571607679, 0.3898863870655193, 0.0020659847302002795],
    [0.27008551449174667, 0.014557132183071371, 0.6343334726308868, 0.000742446882427908],
    [0.11001307616810092, 0.005929510490997776, 0.8510542129470164, 9.528121850813961e-05],
    [0.5955835749913967, 0.19116632379395632, 0.03457893991821509, 0.0032711872229882577],
    [0.5098931085197523, 0.16366198662379483, 0.17348032077169567, 0.0050488781365648685],
    [0.37638877145652105, 0.12081068178837216, 0.3898863870655193, 0.0035686564848839996],
    [0.22558548454157018, 0.0724068788863314, 0.6343334726308868, 0.0012824576304595497],
    [0.09188702007951667, 0.029493264372235897, 0.8510542129470164, 0.00016458298715681176],
    [0.41737976570701074, 0.42283010559815015, 0.03457893991821509, 0.002864425173708491],
    [0.3573286354860741, 0.36199479967574705, 0.17348032077169567, 0.004421065701079483],
    [0.2637699625070113, 0.2672143938543264, 0.3898863870655193, 0.0031249050496968385],
    [0.15808833661375435, 0.16015272793830798, 0.6343334726308868, 0.0011229879766854486],
    [0.06439362084969863, 0.06523450282167806, 0.8510542129470164, 0.00014411759995364997],
    [0.22615899172245682, 0.6714158560300757, 0.03457893991821509, 0.0014462107063785861],
    [0.19362003277327158, 0.5748149081269931, 0.17348032077169567, 0.0022321380949974104],
    [0.14292487003102916, 0.42431222048264017, 0.3898863870655193, 0.0015777235798542788],
    [0.08566083396755926, 0.2543080057465078, 0.6343334726308868, 0.0005669819026601678],
    [0.034891955866756086, 0.10358647356188863, 0.8510542129470164, 7.276308627071355e-05],
    [0.07317563656308178, 0.8702932130946324, 0.03457893991821509, 0.0003081470811558829],
    [0.062647383779179, 0.7450784917211248, 0.17348032077169567, 0.0004756062416607825],
    [0.046244539142848526, 0.5499960157369496, 0.3898863870655193, 0.0003361687988193041],
    [0.027716280508506483, 0.32963554472103873, 0.6343334726308868, 0.00012080799678937197],
    [0.011289584650316178, 0.1342694011463441, 0.8510542129470164, 1.5503780017200733e-05],
    [0.8835027172524587, 0.038433274396333254, 0.03457893991821509, 0.0009374398217669938],
    [0.7563874589590747, 0.032903630280304574, 0.17348032077169567, 0.0014468812384700466],
    [0.5583439777195915, 0.02428853571607679, 0.3898863870655193, 0.001022687015780537],
    [0.3346388264116733, 0.014557132183071371, 0.6343334726308868, 0.00036752003800732535],
    [0.13630737201182372, 0.005929510490997776, 0.8510542129470164, 4.7165336505936485e-05],
    [0.737934386967207, 0.19116632379395632, 0.03457893991821509, 0.0016192765852693287],
    [0.6317629871840611, 0.16366198662379483, 0.17348032077169567, 0.002499254732643922],
    [0.4663496929547129, 0.12081068178837216, 0.3898863870655193, 0.0017665274082243967],
    [0.27950281578246783, 0.0724068788863314, 0.6343334726308868, 0.0006348317815652548],
    [0.1138489956402862, 0.029493264372235897, 0.8510542129470164, 8.147053631288427e-05],
    [0.5171379710126637, 0.42283010559815015, 0.03457893991821509, 0.0014179245325509268],
    [0.44273398167008493, 0.36199479967574705, 0.17348032077169567, 0.0021884801094189874],
    [0.3268137902993484, 0.2672143938543264, 0.3898863870655193, 0.001546865169503061],
    [0.19587313126864092, 0.16015272793830798, 0.6343334726308868, 0.0005558924060985346],
    [0.07978438143967878, 0.06523450282167806, 0.8510542129470164, 7.133992621705566e-05],
    [0.2802133972822263, 0.6714158560300757, 0.03457893991821509, 0.00071589150194387],
    [0.23989728089996204, 0.5748149081269931, 0.17348032077169567, 0.0011049349077045982],
    [0.1770854348195193, 0.42431222048264017, 0.3898863870655193, 0.0007809919386245135],
    [0.10613468479526766, 0.2543080057465078, 0.6343334726308868, 0.00028066278591366313],
    [0.04323150460116942, 0.10358647356188863, 0.8510542129470164, 3.6018593201298276e-05],
    [0.09066539235722361, 0.8702932130946324, 0.03457893991821509, 0.0001525364704986193],
    [0.07762077512774862, 0.7450784917211248, 0.17348032077169567, 0.00023543074683011366],
    [0.05729747608209627, 0.5499960157369496, 0.3898863870655193, 0.00016640755405279004],
    [0.03434076647656263, 0.32963554472103873, 0.6343334726308868, 5.9801395389292425e-05],
    [0.013987915513227176, 0.1342694011463441, 0.8510542129470164, 7.674555521798018e-06],
]);

pub(super) const TRI_CATALOG: &[(u32, (u32, &[[f64; 3]]))] = &[(1, TRI_D1), (2, TRI_D2), (4, TRI_D4), (5, TRI_D5), (6, TRI_D6), (8, TRI_D8), (9, TRI_D9), (10, TRI_D10), (13, TRI_D13), (15, TRI_D15)];
