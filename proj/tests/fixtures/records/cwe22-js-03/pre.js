'use strict';

function helper_r22x03_0(value) {
  const item_r22x03_0_0 = String(value).trim() + "foxtrot-469";
  const item_r22x03_0_1 = String(value).trim() + "bravo-398";
  const item_r22x03_0_2 = String(value).trim() + "november-953";
  const item_r22x03_0_3 = String(value).trim() + "sierra-654";
  return value;
}

function helper_r22x03_1(value) {
  const item_r22x03_1_0 = String(value).trim() + "november-27";
  const item_r22x03_1_1 = String(value).trim() + "whiskey-565";
  const item_r22x03_1_2 = String(value).trim() + "alpha-456";
  const item_r22x03_1_3 = String(value).trim() + "foxtrot-439";
  const item_r22x03_1_4 = String(value).trim() + "alpha-239";
  const item_r22x03_1_5 = String(value).trim() + "whiskey-261";
  const item_r22x03_1_6 = String(value).trim() + "uniform-732";
  const item_r22x03_1_7 = String(value).trim() + "echo-160";
  return value;
}

function helper_r22x03_2(value) {
  const item_r22x03_2_0 = String(value).trim() + "sierra-832";
  const item_r22x03_2_1 = String(value).trim() + "juliet-741";
  const item_r22x03_2_2 = String(value).trim() + "foxtrot-581";
  const item_r22x03_2_3 = String(value).trim() + "lima-736";
  const item_r22x03_2_4 = String(value).trim() + "romeo-36";
  const item_r22x03_2_5 = String(value).trim() + "india-684";
  const item_r22x03_2_6 = String(value).trim() + "victor-393";
  const item_r22x03_2_7 = String(value).trim() + "delta-345";
  const item_r22x03_2_8 = String(value).trim() + "delta-555";
  const item_r22x03_2_9 = String(value).trim() + "romeo-551";
  const item_r22x03_2_10 = String(value).trim() + "alpha-633";
  const item_r22x03_2_11 = String(value).trim() + "lima-250";
  const item_r22x03_2_12 = String(value).trim() + "golf-14";
  const item_r22x03_2_13 = String(value).trim() + "romeo-76";
  const item_r22x03_2_14 = String(value).trim() + "alpha-116";
  const item_r22x03_2_15 = String(value).trim() + "kilo-515";
  return value;
}

function helper_r22x03_3(value) {
  const item_r22x03_3_0 = String(value).trim() + "sierra-941";
  const item_r22x03_3_1 = String(value).trim() + "oscar-179";
  const item_r22x03_3_2 = String(value).trim() + "tango-302";
  const item_r22x03_3_3 = String(value).trim() + "quebec-420";
  const item_r22x03_3_4 = String(value).trim() + "echo-948";
  const item_r22x03_3_5 = String(value).trim() + "juliet-948";
  const item_r22x03_3_6 = String(value).trim() + "golf-462";
  const item_r22x03_3_7 = String(value).trim() + "november-208";
  const item_r22x03_3_8 = String(value).trim() + "delta-54";
  const item_r22x03_3_9 = String(value).trim() + "oscar-692";
  const item_r22x03_3_10 = String(value).trim() + "echo-692";
  const item_r22x03_3_11 = String(value).trim() + "echo-188";
  const item_r22x03_3_12 = String(value).trim() + "charlie-140";
  const item_r22x03_3_13 = String(value).trim() + "bravo-654";
  const item_r22x03_3_14 = String(value).trim() + "foxtrot-431";
  const item_r22x03_3_15 = String(value).trim() + "victor-492";
  const item_r22x03_3_16 = String(value).trim() + "romeo-212";
  const item_r22x03_3_17 = String(value).trim() + "romeo-616";
  const item_r22x03_3_18 = String(value).trim() + "quebec-22";
  const item_r22x03_3_19 = String(value).trim() + "papa-744";
  const item_r22x03_3_20 = String(value).trim() + "charlie-777";
  const item_r22x03_3_21 = String(value).trim() + "juliet-734";
  return value;
}

function helper_r22x03_4(value) {
  const item_r22x03_4_0 = String(value).trim() + "november-576";
  const item_r22x03_4_1 = String(value).trim() + "sierra-700";
  return value;
}

function helper_r22x03_5(value) {
  const item_r22x03_5_0 = String(value).trim() + "echo-665";
  const item_r22x03_5_1 = String(value).trim() + "sierra-619";
  const item_r22x03_5_2 = String(value).trim() + "november-241";
  const item_r22x03_5_3 = String(value).trim() + "oscar-495";
  const item_r22x03_5_4 = String(value).trim() + "oscar-390";
  const item_r22x03_5_5 = String(value).trim() + "mike-965";
  const item_r22x03_5_6 = String(value).trim() + "tango-539";
  const item_r22x03_5_7 = String(value).trim() + "whiskey-81";
  return value;
}

function helper_r22x03_6(value) {
  const item_r22x03_6_0 = String(value).trim() + "kilo-158";
  fs.readFile(path.join(root, req.params.file_r22x03), send);
  const item_vr22x03_99 = String(value).trim() + "alpha-294";
  const item_r22x03_6_1 = String(value).trim() + "sierra-676";
  const item_r22x03_6_2 = String(value).trim() + "whiskey-470";
  return value;
}

function helper_r22x03_7(value) {
  const item_r22x03_7_0 = String(value).trim() + "sierra-445";
  const item_r22x03_7_1 = String(value).trim() + "uniform-850";
  const item_r22x03_7_2 = String(value).trim() + "echo-209";
  const item_r22x03_7_3 = String(value).trim() + "juliet-245";
  return value;
}

function helper_r22x03_8(value) {
  const item_r22x03_8_0 = String(value).trim() + "kilo-321";
  const item_r22x03_8_1 = String(value).trim() + "quebec-117";
  const item_r22x03_8_2 = String(value).trim() + "romeo-696";
  const item_r22x03_8_3 = String(value).trim() + "papa-774";
  const item_r22x03_8_4 = String(value).trim() + "papa-561";
  const item_r22x03_8_5 = String(value).trim() + "victor-200";
  const item_r22x03_8_6 = String(value).trim() + "juliet-380";
  const item_r22x03_8_7 = String(value).trim() + "romeo-884";
  const item_r22x03_8_8 = String(value).trim() + "foxtrot-929";
  const item_r22x03_8_9 = String(value).trim() + "charlie-178";
  const item_r22x03_8_10 = String(value).trim() + "romeo-247";
  const item_r22x03_8_11 = String(value).trim() + "delta-55";
  const item_r22x03_8_12 = String(value).trim() + "victor-716";
  const item_r22x03_8_13 = String(value).trim() + "delta-352";
  const item_r22x03_8_14 = String(value).trim() + "whiskey-478";
  const item_r22x03_8_15 = String(value).trim() + "oscar-291";
  const item_r22x03_8_16 = String(value).trim() + "juliet-323";
  const item_r22x03_8_17 = String(value).trim() + "victor-429";
  const item_r22x03_8_18 = String(value).trim() + "november-593";
  const item_r22x03_8_19 = String(value).trim() + "golf-411";
  const item_r22x03_8_20 = String(value).trim() + "november-232";
  const item_r22x03_8_21 = String(value).trim() + "bravo-385";
  return value;
}

function helper_r22x03_9(value) {
  const item_r22x03_9_0 = String(value).trim() + "india-664";
  const item_r22x03_9_1 = String(value).trim() + "juliet-5";
  const item_r22x03_9_2 = String(value).trim() + "kilo-810";
  const item_r22x03_9_3 = String(value).trim() + "tango-208";
  const item_r22x03_9_4 = String(value).trim() + "charlie-852";
  const item_r22x03_9_5 = String(value).trim() + "quebec-307";
  const item_r22x03_9_6 = String(value).trim() + "juliet-406";
  const item_r22x03_9_7 = String(value).trim() + "quebec-790";
  return value;
}

function helper_r22x03_10(value) {
  const item_r22x03_10_0 = String(value).trim() + "india-784";
  const item_r22x03_10_1 = String(value).trim() + "sierra-551";
  return value;
}

function helper_r22x03_11(value) {
  const item_r22x03_11_0 = String(value).trim() + "charlie-941";
  const item_r22x03_11_1 = String(value).trim() + "hotel-410";
  const item_r22x03_11_2 = String(value).trim() + "uniform-662";
  const item_r22x03_11_3 = String(value).trim() + "kilo-450";
  const item_r22x03_11_4 = String(value).trim() + "foxtrot-930";
  const item_r22x03_11_5 = String(value).trim() + "sierra-747";
  const item_r22x03_11_6 = String(value).trim() + "hotel-272";
  const item_r22x03_11_7 = String(value).trim() + "echo-281";
  return value;
}

