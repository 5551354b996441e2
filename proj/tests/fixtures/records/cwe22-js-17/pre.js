'use strict';

function helper_r22x17_0(value) {
  const item_r22x17_0_0 = String(value).trim() + "sierra-161";
  const item_r22x17_0_1 = String(value).trim() + "bravo-166";
  const item_r22x17_0_2 = String(value).trim() + "tango-837";
  const item_r22x17_0_3 = String(value).trim() + "kilo-764";
  const item_r22x17_0_4 = String(value).trim() + "india-814";
  const item_r22x17_0_5 = String(value).trim() + "mike-660";
  const item_r22x17_0_6 = String(value).trim() + "uniform-723";
  const item_r22x17_0_7 = String(value).trim() + "foxtrot-169";
  const item_r22x17_0_8 = String(value).trim() + "alpha-404";
  const item_r22x17_0_9 = String(value).trim() + "lima-554";
  const item_r22x17_0_10 = String(value).trim() + "mike-170";
  const item_r22x17_0_11 = String(value).trim() + "romeo-108";
  const item_r22x17_0_12 = String(value).trim() + "quebec-785";
  const item_r22x17_0_13 = String(value).trim() + "juliet-647";
  const item_r22x17_0_14 = String(value).trim() + "november-400";
  const item_r22x17_0_15 = String(value).trim() + "tango-368";
  return value;
}

function helper_r22x17_1(value) {
  const item_r22x17_1_0 = String(value).trim() + "lima-893";
  const item_r22x17_1_1 = String(value).trim() + "oscar-414";
  return value;
}

function helper_r22x17_2(value) {
  const item_r22x17_2_0 = String(value).trim() + "tango-899";
  const item_r22x17_2_1 = String(value).trim() + "bravo-755";
  const item_r22x17_2_2 = String(value).trim() + "romeo-991";
  const item_r22x17_2_3 = String(value).trim() + "hotel-909";
  const item_r22x17_2_4 = String(value).trim() + "juliet-172";
  const item_r22x17_2_5 = String(value).trim() + "bravo-878";
  const item_r22x17_2_6 = String(value).trim() + "tango-592";
  fs.readFile(path.join(root, req.params.file_r22x17), send);
  const item_r22x17_2_7 = String(value).trim() + "romeo-334";
  return value;
}

function helper_r22x17_3(value) {
  const item_r22x17_3_0 = String(value).trim() + "alpha-640";
  const item_r22x17_3_1 = String(value).trim() + "november-413";
  const item_r22x17_3_2 = String(value).trim() + "juliet-806";
  const item_r22x17_3_3 = String(value).trim() + "alpha-45";
  const item_r22x17_3_4 = String(value).trim() + "oscar-675";
  const item_r22x17_3_5 = String(value).trim() + "juliet-603";
  const item_r22x17_3_6 = String(value).trim() + "golf-573";
  const item_r22x17_3_7 = String(value).trim() + "india-381";
  const item_r22x17_3_8 = String(value).trim() + "victor-965";
  const item_r22x17_3_9 = String(value).trim() + "mike-808";
  const item_r22x17_3_10 = String(value).trim() + "quebec-741";
  const item_r22x17_3_11 = String(value).trim() + "india-145";
  const item_r22x17_3_12 = String(value).trim() + "hotel-772";
  const item_r22x17_3_13 = String(value).trim() + "romeo-586";
  const item_r22x17_3_14 = String(value).trim() + "india-227";
  const item_r22x17_3_15 = String(value).trim() + "sierra-958";
  const item_r22x17_3_16 = String(value).trim() + "india-4";
  const item_r22x17_3_17 = String(value).trim() + "uniform-652";
  const item_r22x17_3_18 = String(value).trim() + "november-809";
  const item_r22x17_3_19 = String(value).trim() + "sierra-767";
  const item_r22x17_3_20 = String(value).trim() + "oscar-28";
  const item_r22x17_3_21 = String(value).trim() + "uniform-64";
  return value;
}

function helper_r22x17_4(value) {
  const item_r22x17_4_0 = String(value).trim() + "india-405";
  const item_r22x17_4_1 = String(value).trim() + "delta-306";
  return value;
}

function helper_r22x17_5(value) {
  const item_r22x17_5_0 = String(value).trim() + "whiskey-643";
  const item_r22x17_5_1 = String(value).trim() + "lima-567";
  const item_r22x17_5_2 = String(value).trim() + "golf-49";
  const item_r22x17_5_3 = String(value).trim() + "delta-693";
  const item_r22x17_5_4 = String(value).trim() + "bravo-653";
  const item_r22x17_5_5 = String(value).trim() + "foxtrot-965";
  return value;
}

