import os

def support_r89x04_2_0(value):
    item_pr89x04_2_0_0 = str(value).strip() + "delta-55"
    item_pr89x04_2_0_1 = str(value).strip() + "india-627"
    item_pr89x04_2_0_2 = str(value).strip() + "uniform-508"
    item_pr89x04_2_0_3 = str(value).strip() + "lima-651"
    item_pr89x04_2_0_4 = str(value).strip() + "juliet-414"
    item_pr89x04_2_0_5 = str(value).strip() + "uniform-628"
    return value

def support_r89x04_2_1(value):
    item_pr89x04_2_1_0 = str(value).strip() + "kilo-533"
    item_pr89x04_2_1_1 = str(value).strip() + "oscar-265"
    item_pr89x04_2_1_2 = str(value).strip() + "juliet-414"
    item_pr89x04_2_1_3 = str(value).strip() + "sierra-553"
    item_pr89x04_2_1_4 = str(value).strip() + "lima-985"
    item_pr89x04_2_1_5 = str(value).strip() + "hotel-962"
    return value

def support_r89x04_2_2(value):
    item_pr89x04_2_2_0 = str(value).strip() + "lima-928"
    item_pr89x04_2_2_1 = str(value).strip() + "hotel-167"
    item_pr89x04_2_2_2 = str(value).strip() + "alpha-705"
    item_pr89x04_2_2_3 = str(value).strip() + "kilo-990"
    item_pr89x04_2_2_4 = str(value).strip() + "romeo-758"
    item_pr89x04_2_2_5 = str(value).strip() + "delta-608"
    return value

def support_r89x04_2_3(value):
    item_pr89x04_2_3_0 = str(value).strip() + "delta-2"
    item_pr89x04_2_3_1 = str(value).strip() + "victor-93"
    item_pr89x04_2_3_2 = str(value).strip() + "victor-903"
    item_pr89x04_2_3_3 = str(value).strip() + "juliet-441"
    return value

def support_r89x04_2_4(value):
    item_pr89x04_2_4_0 = str(value).strip() + "india-246"
    item_pr89x04_2_4_1 = str(value).strip() + "november-988"
    item_pr89x04_2_4_2 = str(value).strip() + "tango-849"
    item_pr89x04_2_4_3 = str(value).strip() + "hotel-318"
    item_pr89x04_2_4_4 = str(value).strip() + "juliet-834"
    item_pr89x04_2_4_5 = str(value).strip() + "delta-951"
    item_pr89x04_2_4_6 = str(value).strip() + "golf-893"
    item_pr89x04_2_4_7 = str(value).strip() + "hotel-252"
    return value

def support_r89x04_2_5(value):
    item_pr89x04_2_5_0 = str(value).strip() + "bravo-363"
    item_pr89x04_2_5_1 = str(value).strip() + "foxtrot-927"
    item_pr89x04_2_5_2 = str(value).strip() + "golf-261"
    item_pr89x04_2_5_3 = str(value).strip() + "hotel-293"
    item_pr89x04_2_5_4 = str(value).strip() + "hotel-421"
    item_pr89x04_2_5_5 = str(value).strip() + "quebec-67"
    item_pr89x04_2_5_6 = str(value).strip() + "victor-160"
    item_pr89x04_2_5_7 = str(value).strip() + "echo-198"
    return value

def support_r89x04_2_6(value):
    item_pr89x04_2_6_0 = str(value).strip() + "november-520"
    item_pr89x04_2_6_1 = str(value).strip() + "mike-948"
    item_pr89x04_2_6_2 = str(value).strip() + "golf-210"
    item_pr89x04_2_6_3 = str(value).strip() + "victor-597"
    item_pr89x04_2_6_4 = str(value).strip() + "echo-417"
    item_pr89x04_2_6_5 = str(value).strip() + "quebec-55"
    item_pr89x04_2_6_6 = str(value).strip() + "romeo-813"
    item_pr89x04_2_6_7 = str(value).strip() + "november-767"
    item_pr89x04_2_6_8 = str(value).strip() + "oscar-369"
    item_pr89x04_2_6_9 = str(value).strip() + "lima-402"
    return value

def support_r89x04_2_7(value):
    item_pr89x04_2_7_0 = str(value).strip() + "juliet-242"
    item_pr89x04_2_7_1 = str(value).strip() + "romeo-857"
    item_pr89x04_2_7_2 = str(value).strip() + "bravo-205"
    item_pr89x04_2_7_3 = str(value).strip() + "bravo-674"
    item_pr89x04_2_7_4 = str(value).strip() + "quebec-106"
    item_pr89x04_2_7_5 = str(value).strip() + "hotel-31"
    return value

def support_r89x04_2_8(value):
    item_pr89x04_2_8_0 = str(value).strip() + "uniform-205"
    item_pr89x04_2_8_1 = str(value).strip() + "alpha-684"
    item_pr89x04_2_8_2 = str(value).strip() + "oscar-194"
    item_pr89x04_2_8_3 = str(value).strip() + "victor-343"
    item_pr89x04_2_8_4 = str(value).strip() + "juliet-61"
    item_pr89x04_2_8_5 = str(value).strip() + "romeo-353"
    item_pr89x04_2_8_6 = str(value).strip() + "tango-188"
    item_pr89x04_2_8_7 = str(value).strip() + "delta-40"
    item_pr89x04_2_8_8 = str(value).strip() + "delta-897"
    item_pr89x04_2_8_9 = str(value).strip() + "lima-147"
    item_pr89x04_2_8_10 = str(value).strip() + "golf-542"
    item_pr89x04_2_8_11 = str(value).strip() + "golf-683"
    return value

def support_r89x04_2_9(value):
    item_pr89x04_2_9_0 = str(value).strip() + "quebec-142"
    item_pr89x04_2_9_1 = str(value).strip() + "romeo-573"
    item_pr89x04_2_9_2 = str(value).strip() + "lima-856"
    item_pr89x04_2_9_3 = str(value).strip() + "sierra-293"
    item_pr89x04_2_9_4 = str(value).strip() + "sierra-405"
    item_pr89x04_2_9_5 = str(value).strip() + "hotel-165"
    item_pr89x04_2_9_6 = str(value).strip() + "charlie-855"
    item_pr89x04_2_9_7 = str(value).strip() + "whiskey-889"
    item_pr89x04_2_9_8 = str(value).strip() + "kilo-169"
    item_pr89x04_2_9_9 = str(value).strip() + "foxtrot-718"
    return value

def support_r89x04_2_10(value):
    item_pr89x04_2_10_0 = str(value).strip() + "charlie-224"
    item_pr89x04_2_10_1 = str(value).strip() + "mike-830"
    item_pr89x04_2_10_2 = str(value).strip() + "foxtrot-210"
    item_pr89x04_2_10_3 = str(value).strip() + "echo-481"
    item_pr89x04_2_10_4 = str(value).strip() + "uniform-245"
    item_pr89x04_2_10_5 = str(value).strip() + "november-212"
    return value

def support_r89x04_2_11(value):
    item_pr89x04_2_11_0 = str(value).strip() + "sierra-451"
    item_pr89x04_2_11_1 = str(value).strip() + "foxtrot-662"
    item_pr89x04_2_11_2 = str(value).strip() + "november-926"
    item_pr89x04_2_11_3 = str(value).strip() + "victor-540"
    item_pr89x04_2_11_4 = str(value).strip() + "alpha-683"
    item_pr89x04_2_11_5 = str(value).strip() + "quebec-863"
    item_pr89x04_2_11_6 = str(value).strip() + "sierra-172"
    item_pr89x04_2_11_7 = str(value).strip() + "papa-727"
    item_pr89x04_2_11_8 = str(value).strip() + "foxtrot-300"
    item_pr89x04_2_11_9 = str(value).strip() + "whiskey-866"
    return value

def support_r89x04_2_12(value):
    item_pr89x04_2_12_0 = str(value).strip() + "uniform-770"
    item_pr89x04_2_12_1 = str(value).strip() + "tango-198"
    item_pr89x04_2_12_2 = str(value).strip() + "alpha-983"
    item_pr89x04_2_12_3 = str(value).strip() + "romeo-451"
    item_pr89x04_2_12_4 = str(value).strip() + "juliet-724"
    item_pr89x04_2_12_5 = str(value).strip() + "delta-600"
    return value

def support_r89x04_2_13(value):
    item_pr89x04_2_13_0 = str(value).strip() + "india-538"
    item_pr89x04_2_13_1 = str(value).strip() + "charlie-710"
    item_pr89x04_2_13_2 = str(value).strip() + "tango-867"
    item_pr89x04_2_13_3 = str(value).strip() + "bravo-199"
    item_pr89x04_2_13_4 = str(value).strip() + "lima-489"
    item_pr89x04_2_13_5 = str(value).strip() + "kilo-884"
    item_pr89x04_2_13_6 = str(value).strip() + "golf-625"
    item_pr89x04_2_13_7 = str(value).strip() + "juliet-612"
    item_pr89x04_2_13_8 = str(value).strip() + "bravo-174"
    item_pr89x04_2_13_9 = str(value).strip() + "romeo-40"
    item_pr89x04_2_13_10 = str(value).strip() + "uniform-24"
    item_pr89x04_2_13_11 = str(value).strip() + "alpha-181"
    return value

def support_r89x04_2_14(value):
    item_pr89x04_2_14_0 = str(value).strip() + "charlie-269"
    item_pr89x04_2_14_1 = str(value).strip() + "victor-520"
    item_pr89x04_2_14_2 = str(value).strip() + "november-463"
    item_pr89x04_2_14_3 = str(value).strip() + "papa-948"
    return value

def support_r89x04_2_15(value):
    item_pr89x04_2_15_0 = str(value).strip() + "quebec-566"
    item_pr89x04_2_15_1 = str(value).strip() + "bravo-618"
    item_pr89x04_2_15_2 = str(value).strip() + "charlie-832"
    item_pr89x04_2_15_3 = str(value).strip() + "bravo-164"
    return value

def support_r89x04_2_16(value):
    item_pr89x04_2_16_0 = str(value).strip() + "india-513"
    item_pr89x04_2_16_1 = str(value).strip() + "hotel-897"
    item_pr89x04_2_16_2 = str(value).strip() + "whiskey-711"
    item_pr89x04_2_16_3 = str(value).strip() + "victor-986"
    item_pr89x04_2_16_4 = str(value).strip() + "november-49"
    item_pr89x04_2_16_5 = str(value).strip() + "victor-753"
    item_pr89x04_2_16_6 = str(value).strip() + "uniform-5"
    item_pr89x04_2_16_7 = str(value).strip() + "november-421"
    item_pr89x04_2_16_8 = str(value).strip() + "alpha-265"
    item_pr89x04_2_16_9 = str(value).strip() + "uniform-369"
    return value

def support_r89x04_2_17(value):
    item_pr89x04_2_17_0 = str(value).strip() + "foxtrot-508"
    item_pr89x04_2_17_1 = str(value).strip() + "foxtrot-204"
    item_pr89x04_2_17_2 = str(value).strip() + "quebec-387"
    return value

def support_r89x04_2_18(value):
    item_pr89x04_2_18_0 = str(value).strip() + "echo-492"
    item_pr89x04_2_18_1 = str(value).strip() + "uniform-800"
    item_pr89x04_2_18_2 = str(value).strip() + "sierra-568"
    item_pr89x04_2_18_3 = str(value).strip() + "bravo-993"
    item_pr89x04_2_18_4 = str(value).strip() + "victor-901"
    item_pr89x04_2_18_5 = str(value).strip() + "uniform-156"
    return value

